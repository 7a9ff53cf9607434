use std::sync::LazyLock;

use proptest::prelude::*;
use qclifford::classical::{classical_orbits, haar_values, MagicAction};
use qclifford::linalg::{c, CVector};
use qclifford::orbits::{relation, ActionMap};
use qclifford::{
    function_algebra, group_algebra, haar_state, kac_paljutkin, FiniteGroup, HopfAlgebraData, Tolerance, DEFAULT_SEED,
};

fn tol() -> Tolerance {
    Tolerance::default()
}

static EXAMPLES: LazyLock<Vec<HopfAlgebraData>> = LazyLock::new(|| {
    vec![
        function_algebra(&FiniteGroup::symmetric(3)),
        group_algebra(&FiniteGroup::symmetric(3), tol(), DEFAULT_SEED).unwrap(),
        group_algebra(&FiniteGroup::quaternion(), tol(), DEFAULT_SEED).unwrap(),
        kac_paljutkin(tol()).unwrap(),
    ]
});

fn coeffs(n: usize) -> impl Strategy<Value = CVector> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
        .prop_map(|v| CVector::from_iterator(v.len(), v.into_iter().map(|(re, im)| c(re, im))))
}

fn example_and_element() -> impl Strategy<Value = (usize, CVector)> {
    (0..4usize).prop_flat_map(|k| (Just(k), coeffs(EXAMPLES[k].dim())))
}

/// A permutation of `0..n` as a strategy.
fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn order(p: &[usize]) -> usize {
    let mut q: Vec<usize> = p.to_vec();
    let mut k = 1;
    while q.iter().enumerate().any(|(i, &x)| i != x) {
        q = q.iter().map(|&x| p[x]).collect();
        k += 1;
    }
    k
}

/// Cycles of `p`, each sorted, ordered by smallest element.
fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            cyc.push(i);
            i = p[i];
        }
        cyc.sort();
        out.push(cyc);
    }
    out
}

/// `Z_m` acting through the powers of `p`, where `m` is the order of `p`.
fn cyclic_action(p: &[usize]) -> (HopfAlgebraData, MagicAction) {
    let m = order(p);
    let g = FiniteGroup::cyclic(m);
    let mut perms = vec![(0..p.len()).collect::<Vec<_>>()];
    for k in 1..m {
        let prev: &Vec<usize> = &perms[k - 1];
        perms.push(prev.iter().map(|&x| p[x]).collect());
    }
    let hopf = function_algebra(&g);
    let magic = MagicAction::from_permutations(&hopf, &g, &perms).unwrap();
    (hopf, magic)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn antipode_is_an_involution_compatible_with_star((k, v) in example_and_element()) {
        let hopf = &EXAMPLES[k];
        let x = hopf.algebra.element(v).unwrap();
        let s = hopf.apply_antipode(&x).unwrap();
        let ss = hopf.apply_antipode(&s).unwrap();
        let scale = 1.0 + x.norm();
        prop_assert!(ss.distance(&x).unwrap() <= 1e-12 * scale);
        let lhs = hopf.apply_antipode(&x.star()).unwrap();
        prop_assert!(lhs.distance(&s.star()).unwrap() <= 1e-12 * scale);
    }

    #[test]
    fn counit_is_multiplicative((k, v) in example_and_element(), w in coeffs(8)) {
        let hopf = &EXAMPLES[k];
        let x = hopf.algebra.element(v).unwrap();
        let mut wv = CVector::zeros(hopf.dim());
        for i in 0..hopf.dim().min(8) {
            wv[i] = w[i];
        }
        let y = hopf.algebra.element(wv).unwrap();
        let lhs = hopf.eps(&x.mul(&y).unwrap()).unwrap();
        let rhs = hopf.eps(&x).unwrap() * hopf.eps(&y).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + x.norm()) * (1.0 + y.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn permutation_orbits_match_cycles(p in (2..6usize).prop_flat_map(permutation)) {
        let (hopf, magic) = cyclic_action(&p);
        let orb = classical_orbits(&magic, &hopf, tol(), DEFAULT_SEED).unwrap();
        let expect = cycles(&p);
        prop_assert_eq!(&orb.partition.classes, &expect);
        prop_assert!(orb.ergodic_matches);
        prop_assert_eq!(orb.ergodic, expect.len() == 1);
        prop_assert!(orb.count_residual <= 1e-9);
        let h = haar_state(&hopf, tol()).unwrap();
        let hv = haar_values(&magic, &h, &orb.partition);
        prop_assert!(hv.residual <= 1e-9);
        prop_assert!(hv.imaginary <= 1e-9);
    }

    #[test]
    fn relation_is_symmetric_for_any_grouping(
        (p, labels) in (2..6usize).prop_flat_map(|n| (permutation(n), prop::collection::vec(0..3usize, n)))
    ) {
        let (hopf, magic) = cyclic_action(&p);
        let alpha = magic.action_map().unwrap();
        let n = p.len();
        let mut summands = Vec::new();
        for g in 0..3 {
            let idx: Vec<usize> = (0..n).filter(|&i| labels[i] == g).collect();
            if idx.is_empty() {
                continue;
            }
            let v = CVector::from_fn(n, |i, _| if idx.contains(&i) { c(1.0, 0.0) } else { c(0.0, 0.0) });
            summands.push(alpha.domain.element(v).unwrap());
        }
        let action = ActionMap::new(alpha, &hopf, summands, tol(), DEFAULT_SEED).unwrap();
        let part = relation(&action, tol()).unwrap();
        prop_assert!(part.symmetric);
        prop_assert!(part.reflexive);
        for i in 0..part.relation.len() {
            for j in 0..part.relation.len() {
                prop_assert_eq!(part.relation[i][j], part.relation[j][i]);
            }
        }
    }

    #[test]
    fn block_dims_do_not_depend_on_the_seed(seed in any::<u64>()) {
        let h = group_algebra(&FiniteGroup::symmetric(3), tol(), seed).unwrap();
        prop_assert_eq!(h.algebra.block_algebra().block_dims(), &[1, 1, 2][..]);
    }
}
