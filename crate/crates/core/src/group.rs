//! Finite groups as multiplication tables.

use std::collections::BTreeSet;

use crate::error::{Axiom, Error, Result};

/// Set of group elements, by index.
pub type ElementSet = BTreeSet<usize>;

/// Largest group order accepted by [`FiniteGroup::from_table`].
pub const MAX_ORDER: usize = 256;

/// A finite group given by its full multiplication table.
///
/// `mult[a][b]` is the index of the product `ab`. The identity and inverse tables are
/// derived at construction and every group axiom is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: Option<String>,
    mult: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates `mult` and derives identity and inverses.
    pub fn from_table(mult: Vec<Vec<usize>>, name: Option<String>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::MalformedTable(format!(
                "order {n} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        for (a, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some((b, &c)) = row.iter().enumerate().find(|(_, &c)| c >= n) {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Closure,
                    a,
                    b,
                    c,
                });
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| {
                // Witness: first failure of the left-and-right identity law for candidate 0.
                let a = (0..n)
                    .find(|&a| mult[0][a] != a || mult[a][0] != a)
                    .unwrap_or(0);
                let c = if mult[0][a] != a { mult[0][a] } else { mult[a][0] };
                Error::AxiomViolation {
                    axiom: Axiom::Identity,
                    a: 0,
                    b: a,
                    c,
                }
            })?;

        let mut inv = Vec::with_capacity(n);
        for (a, row) in mult.iter().enumerate() {
            match (0..n).find(|&b| row[b] == identity && mult[b][a] == identity) {
                Some(b) => inv.push(b),
                None => {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Inverse,
                        a,
                        b: identity,
                        c: identity,
                    })
                }
            }
        }

        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b];
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::Associativity,
                            a,
                            b,
                            c,
                        });
                    }
                }
            }
        }

        Ok(Self {
            name,
            mult,
            identity,
            inv,
        })
    }

    /// Standard table for `Z_n`, `Z_n1×…×Z_nk` (row-major, last factor fastest),
    /// `S_3`, `D_4` or `Q_8`.
    ///
    /// `×`, `x` and `*` are accepted as product separators and the underscore is
    /// optional (`Z4` is `Z_4`).
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroupName(name.to_string());
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        let mult = match compact.as_str() {
            "S_3" | "S3" => symmetric3_table(),
            "D_4" | "D4" => dihedral4_table(),
            "Q_8" | "Q8" => quaternion_table(),
            _ => {
                let shape = parse_cyclic_product(&compact).ok_or_else(unknown)?;
                let order: usize = shape.iter().product();
                if order > MAX_ORDER {
                    return Err(unknown());
                }
                cyclic_product_table(&shape)
            }
        };
        Self::from_table(mult, Some(name.to_string()))
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                index: g,
                order: self.order(),
            })
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    /// Order of the element `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = seed.iter().copied().filter(|&g| g < self.order()).collect();
        let mut out = ElementSet::new();
        out.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if out.insert(y) {
                    frontier.push(y);
                }
            }
        }
        out
    }

    /// True if `set` contains the identity and is closed under products and inverses.
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(&self.identity)
            && set.iter().all(|&a| {
                a < self.order()
                    && set.contains(&self.inv[a])
                    && set.iter().all(|&b| set.contains(&self.mult[a][b]))
            })
    }

    /// Distinct cyclic subgroups `⟨g⟩`.
    pub fn cyclic_subgroups(&self) -> Vec<ElementSet> {
        let mut out: Vec<ElementSet> = Vec::new();
        for g in self.elements() {
            let h = self.subgroup_closure(&ElementSet::from([g]));
            if !out.contains(&h) {
                out.push(h);
            }
        }
        out
    }

    /// All subgroups, by closing every pair of cyclic generators repeatedly.
    pub fn subgroups(&self) -> Vec<ElementSet> {
        let mut out = self.cyclic_subgroups();
        let mut i = 0;
        while i < out.len() {
            for g in self.elements() {
                if out[i].contains(&g) {
                    continue;
                }
                let mut seed = out[i].clone();
                seed.insert(g);
                let h = self.subgroup_closure(&seed);
                if !out.contains(&h) {
                    out.push(h);
                }
            }
            i += 1;
        }
        out.sort_by_key(|h| (h.len(), h.iter().copied().collect::<Vec<_>>()));
        out
    }
}

/// Parses `Z_4`, `Z_2×Z_2`, `Z2xZ3` into cyclic moduli.
pub fn parse_cyclic_product(name: &str) -> Option<Vec<usize>> {
    let normalized = name.replace(['×', '*'], "x");
    let mut shape = Vec::new();
    for factor in normalized.split('x') {
        let digits = factor
            .strip_prefix("Z_")
            .or_else(|| factor.strip_prefix('Z'))?;
        let n: usize = digits.parse().ok()?;
        if n == 0 {
            return None;
        }
        shape.push(n);
    }
    if shape.is_empty() {
        None
    } else {
        Some(shape)
    }
}

/// Row-major mixed-radix digits of `index` for moduli `shape`.
pub fn mixed_radix_digits(mut index: usize, shape: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; shape.len()];
    for (d, &n) in digits.iter_mut().zip(shape).rev() {
        *d = index % n;
        index /= n;
    }
    digits
}

pub fn mixed_radix_index(digits: &[usize], shape: &[usize]) -> usize {
    digits
        .iter()
        .zip(shape)
        .fold(0, |acc, (&d, &n)| acc * n + d % n)
}

fn cyclic_product_table(shape: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = shape.iter().product();
    let digits: Vec<Vec<usize>> = (0..n).map(|i| mixed_radix_digits(i, shape)).collect();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let sum: Vec<usize> = digits[a]
                        .iter()
                        .zip(&digits[b])
                        .zip(shape)
                        .map(|((x, y), m)| (x + y) % m)
                        .collect();
                    mixed_radix_index(&sum, shape)
                })
                .collect()
        })
        .collect()
}

fn symmetric3_table() -> Vec<Vec<usize>> {
    // Permutations of {0,1,2} in lexicographic order; the identity comes first.
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    // (a∘b)(x) = a(b(x))
                    let composed = [
                        perms[a][perms[b][0]],
                        perms[a][perms[b][1]],
                        perms[a][perms[b][2]],
                    ];
                    index(composed)
                })
                .collect()
        })
        .collect()
}

fn dihedral4_table() -> Vec<Vec<usize>> {
    // r^k s^m at index k + 4m, with s r s = r^{-1}.
    (0..8)
        .map(|a| {
            let (k, m) = (a % 4, a / 4);
            (0..8)
                .map(|b| {
                    let (l, n) = (b % 4, b / 4);
                    let rot = if m == 0 { (k + l) % 4 } else { (k + 4 - l) % 4 };
                    rot + 4 * ((m + n) % 2)
                })
                .collect()
        })
        .collect()
}

fn quaternion_table() -> Vec<Vec<usize>> {
    // Index 2u + s encodes sign s ∈ {0: +, 1: −} on unit u ∈ {1, i, j, k}.
    // unit_mul[u][v] = (sign, unit) of u·v.
    const UNIT_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    (0..8)
        .map(|a| {
            let (ua, sa) = (a / 2, a % 2);
            (0..8)
                .map(|b| {
                    let (ub, sb) = (b / 2, b % 2);
                    let (s, u) = UNIT_MUL[ua][ub];
                    2 * u + (s + sa + sb) % 2
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z2_inverses() {
        let g = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!((g.inv(0), g.inv(1)), (0, 1));
    }

    #[test]
    fn missing_identity_is_reported() {
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![0, 1]], None).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::Identity,
                ..
            }
        ));
    }

    #[test]
    fn out_of_range_entry_is_closure_violation() {
        let err = FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]], None).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::Closure,
                a: 0,
                b: 1,
                c: 2
            }
        ));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity 0 and inverses, but not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(t, None).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::Associativity,
                ..
            }
        ));
    }

    #[test]
    fn named_groups() {
        assert_eq!(FiniteGroup::named("Z_1").unwrap().order(), 1);
        let z4 = FiniteGroup::named("Z_4").unwrap();
        assert_eq!(z4.inv(1), 3);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(z4.mul(a, b), (a + b) % 4);
            }
        }
        let s3 = FiniteGroup::named("S_3").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = FiniteGroup::named("D_4").unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        let q8 = FiniteGroup::named("Q_8").unwrap();
        assert!(!q8.is_abelian());
        // Q_8 has a unique involution (-1) and six elements of order 4.
        let orders: Vec<usize> = q8.elements().map(|g| q8.element_order(g)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        // D_4 has five involutions.
        let inv_d4 = d4.elements().filter(|&g| d4.element_order(g) == 2).count();
        assert_eq!(inv_d4, 5);
        let v4 = FiniteGroup::named("Z_2×Z_2").unwrap();
        assert!(v4.is_abelian());
        assert!(v4.elements().all(|g| v4.mul(g, g) == 0));
        assert_eq!(FiniteGroup::named("Z2xZ2").unwrap().table(), v4.table());
        assert!(matches!(
            FiniteGroup::named("A_5"),
            Err(Error::UnknownGroupName(_))
        ));
        assert!(FiniteGroup::named("Z_0").is_err());
    }

    #[test]
    fn closure_examples() {
        let z4 = FiniteGroup::named("Z_4").unwrap();
        assert_eq!(z4.subgroup_closure(&ElementSet::from([2])), ElementSet::from([0, 2]));
        assert_eq!(z4.subgroup_closure(&ElementSet::new()), ElementSet::from([0]));
        let s3 = FiniteGroup::named("S_3").unwrap();
        // [1,2,0] and [2,0,1] are the 3-cycles.
        let expected = ElementSet::from([0, 3, 4]);
        assert_eq!(s3.subgroup_closure(&ElementSet::from([3])), expected);
        assert_eq!(s3.subgroup_closure(&ElementSet::from([4])), expected);
    }

    #[test]
    fn closures_are_subgroups() {
        for name in ["Z_6", "Z_2×Z_4", "S_3", "D_4", "Q_8"] {
            let g = FiniteGroup::named(name).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    let h = g.subgroup_closure(&ElementSet::from([a, b]));
                    assert!(g.is_subgroup(&h), "{name}: <{a},{b}>");
                    assert_eq!(g.order() % h.len(), 0);
                }
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        // S_3: 1 + 3 + 1 + 1; D_4: 10; Q_8: 6.
        assert_eq!(FiniteGroup::named("S_3").unwrap().subgroups().len(), 6);
        assert_eq!(FiniteGroup::named("D_4").unwrap().subgroups().len(), 10);
        assert_eq!(FiniteGroup::named("Q_8").unwrap().subgroups().len(), 6);
    }

    #[test]
    fn mixed_radix_roundtrip() {
        let shape = [2, 3, 4];
        for i in 0..24 {
            assert_eq!(mixed_radix_index(&mixed_radix_digits(i, &shape), &shape), i);
        }
    }
}
