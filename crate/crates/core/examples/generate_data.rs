//! Regenerate the example files under `data/`.
//!
//! cargo run -p qclifford --example generate_data [-- <dir>]

use std::path::PathBuf;

use qclifford::{catalog, Tolerance, DEFAULT_SEED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"));
    std::fs::create_dir_all(&dir)?;
    for (name, entry) in catalog::entries(Tolerance::default(), DEFAULT_SEED)? {
        let path = dir.join(&name);
        entry.write(&path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
