use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::types::TypeSignature;

/// A diagonal `(a, b)` of a polygon with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagonal(pub u8, pub u8);

impl Diagonal {
    pub fn new(u: usize, v: usize) -> Self {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Diagonal(a as u8, b as u8)
    }

    pub fn ends(self) -> (usize, usize) {
        (self.0 as usize, self.1 as usize)
    }

    /// Proper crossing; diagonals sharing an endpoint do not cross.
    pub fn crosses(self, other: Diagonal) -> bool {
        let (a, b) = self.ends();
        let (c, d) = other.ends();
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A convex `n`-gon with vertices `0..n` in cyclic order and a set of
/// pairwise noncrossing diagonals. Side `i` joins vertices `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dissection {
    n: usize,
    diagonals: Vec<Diagonal>,
}

/// Largest polygon the `u8` vertex encoding supports.
pub const MAX_SIDES: usize = 64;

fn is_diagonal(n: usize, d: Diagonal) -> bool {
    let (a, b) = d.ends();
    b < n && b - a >= 2 && !(a == 0 && b == n - 1)
}

impl Dissection {
    pub fn empty(n: usize) -> Result<Self> {
        check_range("n", n as i64, 3, MAX_SIDES as i64)?;
        Ok(Dissection {
            n,
            diagonals: Vec::new(),
        })
    }

    /// Validates and normalises a dissection given as vertex pairs.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Result<Self> {
        let mut d = Self::empty(n)?;
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::InvalidDissection(format!(
                    "vertex out of range in ({u}, {v}) for n = {n}"
                )));
            }
            let diag = Diagonal::new(u, v);
            if !is_diagonal(n, diag) {
                return Err(Error::InvalidDissection(format!(
                    "({u}, {v}) is a side or a point, not a diagonal"
                )));
            }
            if d.diagonals.contains(&diag) {
                return Err(Error::InvalidDissection(format!(
                    "diagonal {diag} repeated"
                )));
            }
            if let Some(other) = d.diagonals.iter().find(|o| o.crosses(diag)) {
                return Err(Error::InvalidDissection(format!(
                    "diagonals {diag} and {other} cross"
                )));
            }
            d.diagonals.push(diag);
        }
        d.diagonals.sort_unstable();
        Ok(d)
    }

    fn from_mapped(n: usize, map: impl Fn(usize) -> usize, diagonals: &[Diagonal]) -> Self {
        let mut diagonals: Vec<Diagonal> = diagonals
            .iter()
            .map(|d| {
                let (a, b) = d.ends();
                Diagonal::new(map(a), map(b))
            })
            .collect();
        diagonals.sort_unstable();
        Dissection { n, diagonals }
    }

    pub fn sides(&self) -> usize {
        self.n
    }

    /// Number of diagonals, the codimension of the face in `K_{n-1}`.
    pub fn k(&self) -> usize {
        self.diagonals.len()
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    /// Rotation taking vertex `v` to `v + r`.
    pub fn rotate(&self, r: usize) -> Self {
        let n = self.n;
        Self::from_mapped(n, |v| (v + r) % n, &self.diagonals)
    }

    /// Reflection taking vertex `v` to `-v`.
    pub fn reflect(&self) -> Self {
        let n = self.n;
        Self::from_mapped(n, |v| (n - v) % n, &self.diagonals)
    }

    /// Twist along `d = (a, b)`: the piece on vertices `a..=b` is reflected
    /// across the perpendicular bisector of `d` (`a + i <-> b - i`) and glued
    /// back. The other piece is left in place.
    pub fn twist(&self, d: Diagonal) -> Result<Self> {
        if !self.contains(d) {
            let (a, b) = d.ends();
            return Err(Error::MissingDiagonal(a, b));
        }
        let (a, b) = d.ends();
        let inside = |e: &Diagonal| e.0 as usize >= a && e.1 as usize <= b;
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|e| {
                let (u, v) = e.ends();
                if inside(e) {
                    Diagonal::new(a + b - u, a + b - v)
                } else {
                    *e
                }
            })
            .collect();
        diagonals.sort_unstable();
        Ok(Dissection {
            n: self.n,
            diagonals,
        })
    }

    /// The cells as vertex lists, each in increasing (cyclic) order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells: Vec<Vec<usize>> = vec![(0..self.n).collect()];
        for d in &self.diagonals {
            let (a, b) = d.ends();
            let idx = cells
                .iter()
                .position(|c| c.contains(&a) && c.contains(&b))
                .expect("noncrossing diagonals always split one cell");
            let cell = cells.swap_remove(idx);
            let ia = cell.iter().position(|&v| v == a).unwrap();
            let ib = cell.iter().position(|&v| v == b).unwrap();
            let inner = cell[ia..=ib].to_vec();
            let mut outer = cell[..=ia].to_vec();
            outer.extend_from_slice(&cell[ib..]);
            cells.push(inner);
            cells.push(outer);
        }
        cells.sort();
        cells
    }

    /// Multiset of cell sizes.
    pub fn signature(&self) -> TypeSignature {
        TypeSignature::from_cell_sizes(self.cells().iter().map(|c| c.len() as u32))
            .expect("every cell has at least three sides")
    }

    /// The diagonals as `a-b` tokens separated by spaces.
    pub fn diagonal_list(&self) -> String {
        self.diagonals
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All diagonals of an `n`-gon in lexicographic order.
pub fn all_diagonals(n: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            let d = Diagonal::new(a, b);
            if is_diagonal(n, d) {
                out.push(d);
            }
        }
    }
    out
}

/// Calls `visit` on every dissection of the `n`-gon with exactly `k`
/// diagonals, found by backtracking over diagonals in lexicographic order.
pub fn for_each_dissection(n: usize, k: usize, mut visit: impl FnMut(&Dissection)) -> Result<()> {
    check_range("n", n as i64, 3, MAX_SIDES as i64)?;
    check_range("k", k as i64, 0, n as i64 - 3)?;
    let candidates = all_diagonals(n);
    let mut chosen: Vec<Diagonal> = Vec::with_capacity(k);

    fn go(
        n: usize,
        k: usize,
        start: usize,
        candidates: &[Diagonal],
        chosen: &mut Vec<Diagonal>,
        visit: &mut dyn FnMut(&Dissection),
    ) {
        if chosen.len() == k {
            visit(&Dissection {
                n,
                diagonals: chosen.clone(),
            });
            return;
        }
        let needed = k - chosen.len();
        for i in start..candidates.len() {
            if candidates.len() - i < needed {
                break;
            }
            let d = candidates[i];
            if chosen.iter().any(|c| c.crosses(d)) {
                continue;
            }
            chosen.push(d);
            go(n, k, i + 1, candidates, chosen, visit);
            chosen.pop();
        }
    }

    go(n, k, 0, &candidates, &mut chosen, &mut visit);
    Ok(())
}

/// All dissections of the `n`-gon with `k` diagonals.
pub fn enumerate_dissections(n: usize, k: usize) -> Result<Vec<Dissection>> {
    let mut out = Vec::new();
    for_each_dissection(n, k, |d| out.push(d.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facecount::faces;
    use num_bigint::BigUint;

    fn dis(n: usize, pairs: &[(usize, usize)]) -> Dissection {
        Dissection::new(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Dissection::new(6, [(0, 1)]).is_err());
        assert!(Dissection::new(6, [(0, 5)]).is_err());
        assert!(Dissection::new(6, [(0, 3), (1, 4)]).is_err());
        assert!(Dissection::new(6, [(0, 3), (3, 0)]).is_err());
        assert!(Dissection::new(6, [(0, 7)]).is_err());
        assert!(Dissection::new(2, []).is_err());
        assert!(Dissection::new(6, [(0, 3), (3, 5), (0, 2)]).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_dissections(6, 1).unwrap().len(), 9);
        assert_eq!(enumerate_dissections(6, 3).unwrap().len(), 14);
        assert_eq!(
            enumerate_dissections(7, 0).unwrap(),
            vec![Dissection::empty(7).unwrap()]
        );
        for n in 3..=10usize {
            for k in 0..=n - 3 {
                let count = enumerate_dissections(n, k).unwrap().len();
                assert_eq!(BigUint::from(count), faces(n as i64 - 1, k as i64).unwrap());
            }
        }
        assert!(enumerate_dissections(6, 4).is_err());
    }

    #[test]
    fn cells_of_a_zigzag() {
        let d = dis(6, &[(1, 3), (0, 3), (0, 4)]);
        assert_eq!(
            d.cells(),
            vec![vec![0, 1, 3], vec![0, 3, 4], vec![0, 4, 5], vec![1, 2, 3]]
        );
        assert_eq!(d.signature().to_string(), "<3^4>");
    }

    #[test]
    fn fan_twists_to_zigzag() {
        let fan = dis(6, &[(0, 2), (0, 3), (0, 4)]);
        let twisted = fan.twist(Diagonal::new(0, 3)).unwrap();
        assert_eq!(twisted, dis(6, &[(1, 3), (0, 3), (0, 4)]));
        assert_eq!(twisted.twist(Diagonal::new(0, 3)).unwrap(), fan);
    }

    #[test]
    fn twisting_a_lone_triangle_is_trivial() {
        let d = dis(7, &[(0, 2), (2, 5)]);
        assert_eq!(d.twist(Diagonal::new(0, 2)).unwrap(), d);
        assert!(matches!(
            d.twist(Diagonal::new(1, 3)),
            Err(Error::MissingDiagonal(1, 3))
        ));
    }

    #[test]
    fn dihedral_moves() {
        let d = dis(6, &[(0, 2), (3, 5)]);
        assert_eq!(d.rotate(1), dis(6, &[(1, 3), (0, 4)]));
        assert_eq!(d.rotate(6), d);
        assert_eq!(d.reflect(), dis(6, &[(4, 0), (3, 1)]));
        assert_eq!(d.reflect().reflect(), d);
    }
}
