//! Finite groups given by Cayley tables.

use crate::error::{Error, Result};

/// A finite group; element `0..order`, product `table[g][h] = g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    /// For permutation groups, the permutation of each element (`perm[i]` = image of i).
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::NotAGroup("table is not closed".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(FiniteGroup { name: name.into(), table, identity, inverses, perms: None })
    }

    /// The group generated by the given permutations of `0..n`, elements
    /// sorted lexicographically (so the identity is element 0). Product is
    /// composition: `(g·h)(i) = g(h(i))`.
    pub fn from_permutations(name: impl Into<String>, n: usize, gens: &[Vec<usize>]) -> Result<Self> {
        let id: Vec<usize> = (0..n).collect();
        let mut elems = vec![id];
        let mut frontier = 0;
        while frontier < elems.len() {
            let g = elems[frontier].clone();
            frontier += 1;
            for s in gens {
                let gs: Vec<usize> = (0..n).map(|i| g[s[i]]).collect();
                if !elems.contains(&gs) {
                    elems.push(gs);
                }
            }
        }
        elems.sort();
        let pos = |p: &Vec<usize>| elems.iter().position(|q| q == p).expect("closed");
        let table = elems
            .iter()
            .map(|g| elems.iter().map(|h| pos(&(0..n).map(|i| g[h[i]]).collect())).collect())
            .collect();
        let mut grp = Self::from_table(name, table)?;
        grp.perms = Some(elems);
        Ok(grp)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with `g·h = g + h mod n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mut g = Self::from_table(format!("Z{n}"), table).expect("cyclic group");
        g.perms = Some((0..n).map(|a| (0..n).map(|i| (i + a) % n).collect()).collect());
        g
    }

    /// The symmetric group on `n` letters.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(format!("S{n}"), n, &gens).expect("symmetric group")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; element `2u + s` is `(-1)^s · q_u`
    /// with `q_0 = 1, q_1 = i, q_2 = j, q_3 = k`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const PROD: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (ua, sa) = (a / 2, a % 2);
                        let (ub, sb) = (b / 2, b % 2);
                        let (s, u) = PROD[ua][ub];
                        2 * u + (s + sa + sb) % 2
                    })
                    .collect()
            })
            .collect();
        Self::from_table("Q8", table).expect("quaternion group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn permutation(&self, g: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[g].as_slice())
    }

    pub fn is_normal_subgroup(&self, sub: &[usize]) -> bool {
        (0..self.order()).all(|g| {
            sub.iter()
                .all(|&h| sub.contains(&self.mul(self.mul(g, h), self.inverse(g))))
        })
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for a in 0..self.order() {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> =
                (0..self.order()).map(|g| self.mul(self.mul(g, a), self.inverse(g))).collect();
            cls.sort();
            cls.dedup();
            for &x in &cls {
                seen[x] = true;
            }
            classes.push(cls);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_basics() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.conjugacy_classes().len(), 3);
    }

    #[test]
    fn q8_basics() {
        let q = FiniteGroup::quaternion();
        assert_eq!(q.order(), 8);
        // i^2 = -1
        assert_eq!(q.mul(2, 2), 1);
        assert_eq!(q.conjugacy_classes().len(), 5);
    }

    #[test]
    fn rejects_non_group() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table("bad", bad).is_err());
    }
}
