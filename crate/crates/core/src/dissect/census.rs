use std::collections::{HashSet, VecDeque};

use super::polygon::{enumerate_dissections, Diagonal, Dissection};
use crate::error::{check_range, Error, Result};

/// Largest polygon the labeled census will attempt.
pub const CENSUS_LIMIT: usize = 7;

/// A dissection whose sides carry the labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Labeled {
    labels: Vec<u8>,
    diagonals: Vec<Diagonal>,
}

impl Labeled {
    /// Applies the vertex map `v -> sign * v + shift` (mod n); `sign = -1`
    /// reverses orientation, carrying side `i` to side `-i - 1 + shift`.
    fn transform(&self, reverse: bool, shift: usize) -> Labeled {
        let n = self.labels.len();
        let vmap = |v: usize| {
            if reverse {
                (shift + n - v) % n
            } else {
                (v + shift) % n
            }
        };
        let mut labels = vec![0; n];
        for (i, &l) in self.labels.iter().enumerate() {
            let target = if reverse {
                (shift + 2 * n - i - 1) % n
            } else {
                (i + shift) % n
            };
            labels[target] = l;
        }
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|d| {
                let (a, b) = d.ends();
                Diagonal::new(vmap(a), vmap(b))
            })
            .collect();
        diagonals.sort_unstable();
        Labeled { labels, diagonals }
    }

    /// Representative of the dihedral orbit: label 0 on side 0 and side 1
    /// carrying a smaller label than side `n - 1`.
    fn normalize(&self) -> Labeled {
        let n = self.labels.len();
        let p = self.labels.iter().position(|&l| l == 0).unwrap();
        let turned = self.transform(false, n - p);
        let flipped = self.transform(true, p + 1);
        if turned.labels[1] < turned.labels[n - 1] {
            turned
        } else {
            flipped
        }
    }

    fn twist(&self, d: Diagonal) -> Labeled {
        let (a, b) = d.ends();
        let mut labels = self.labels.clone();
        labels[a..b].reverse();
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|e| {
                let (u, v) = e.ends();
                if (a..=b).contains(&u) && (a..=b).contains(&v) {
                    Diagonal::new(a + b - u, a + b - v)
                } else {
                    *e
                }
            })
            .collect();
        diagonals.sort_unstable();
        Labeled { labels, diagonals }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Orbits of side-labeled `n`-gons with `k` diagonals under rotations,
/// reflections and twists, found by breadth-first closure over twists on
/// dihedrally normalised states.
pub fn labeled_moduli_census(n: usize, k: usize) -> Result<u64> {
    if n > CENSUS_LIMIT {
        return Err(Error::Infeasible {
            what: "labeled census",
            n,
            limit: CENSUS_LIMIT,
        });
    }
    check_range("n", n as i64, 3, CENSUS_LIMIT as i64)?;
    let dissections: Vec<Dissection> = enumerate_dissections(n, k)?;
    let mut seen: HashSet<Labeled> = HashSet::new();
    let mut orbits = 0u64;
    let mut rest: Vec<u8> = (1..n as u8).collect();
    loop {
        if rest[0] < rest[n - 2] {
            let mut labels = vec![0u8];
            labels.extend_from_slice(&rest);
            for d in &dissections {
                let start = Labeled {
                    labels: labels.clone(),
                    diagonals: d.diagonals().to_vec(),
                };
                if seen.contains(&start) {
                    continue;
                }
                orbits += 1;
                seen.insert(start.clone());
                let mut queue = VecDeque::from([start]);
                while let Some(state) = queue.pop_front() {
                    for &diag in &state.diagonals {
                        let next = state.twist(diag).normalize();
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facecount::moduli_faces;
    use num_bigint::BigUint;

    #[test]
    fn anchors() {
        assert_eq!(labeled_moduli_census(5, 0).unwrap(), 12);
        assert_eq!(labeled_moduli_census(4, 0).unwrap(), 3);
        assert_eq!(labeled_moduli_census(5, 2).unwrap(), 15);
        assert_eq!(labeled_moduli_census(3, 0).unwrap(), 1);
    }

    #[test]
    fn agrees_with_formula_up_to_hexagons() {
        for n in 3..=6usize {
            for k in 0..=n - 3 {
                let census = labeled_moduli_census(n, k).unwrap();
                assert_eq!(
                    BigUint::from(census),
                    moduli_faces(n as i64 - 1, k as i64).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn refuses_large_polygons() {
        assert!(matches!(
            labeled_moduli_census(8, 0),
            Err(Error::Infeasible { .. })
        ));
        assert!(labeled_moduli_census(6, 4).is_err());
    }

    #[test]
    fn normalisation_is_dihedral_invariant() {
        let s = Labeled {
            labels: vec![3, 0, 4, 1, 2],
            diagonals: vec![Diagonal::new(0, 2)],
        };
        let base = s.normalize();
        assert_eq!(base.labels[0], 0);
        for shift in 0..5 {
            for reverse in [false, true] {
                assert_eq!(s.transform(reverse, shift).normalize(), base);
            }
        }
    }
}
