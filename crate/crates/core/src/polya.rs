//! Cycle indices of the permutation groups used in the cluster and tree
//! enumerations, and plethystic substitution of a figure-counting series.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{check_range, Result};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// A cycle type: sorted pairs `(cycle length r, multiplicity e)` with `e > 0`.
pub type CycleType = Vec<(u32, u32)>;

/// The cycle index `Z(G)` of a permutation group acting on `degree` sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndex {
    degree: u32,
    terms: BTreeMap<CycleType, BigRational>,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn push_cycles(ct: &mut CycleType, r: u32, e: u32) {
    if e == 0 {
        return;
    }
    match ct.iter_mut().find(|(len, _)| *len == r) {
        Some(entry) => entry.1 += e,
        None => {
            ct.push((r, e));
            ct.sort_unstable();
        }
    }
}

fn cycle_type(parts: &[(u32, u32)]) -> CycleType {
    let mut ct = CycleType::new();
    for &(r, e) in parts {
        push_cycles(&mut ct, r, e);
    }
    ct
}

impl CycleIndex {
    fn empty(degree: u32) -> Self {
        CycleIndex {
            degree,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, ct: CycleType, c: BigRational) {
        debug_assert_eq!(ct.iter().map(|(r, e)| r * e).sum::<u32>(), self.degree);
        let entry = self.terms.entry(ct).or_insert_with(BigRational::zero);
        *entry += c;
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CycleType, &BigRational)> {
        self.terms.iter()
    }

    /// Sum of term coefficients; 1 for any genuine group cycle index.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Substitutes the scalar `q` for every `s_r`; for a group acting on
    /// sites this counts `q`-colourings up to the group.
    pub fn evaluate_constant(&self, q: i64) -> BigRational {
        let q = BigRational::from_integer(q.into());
        self.terms
            .iter()
            .map(|(ct, c)| {
                let cycles: u32 = ct.iter().map(|(_, e)| e).sum();
                c * num_traits::pow(q.clone(), cycles as usize)
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (ct, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (r, e) in ct {
                if *e == 1 {
                    write!(f, " s{r}")?;
                } else {
                    write!(f, " s{r}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Euler's totient by trial factorisation.
pub fn totient(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The two-element group reversing `k` sites around a root edge:
/// `(s1^k + s2^(k/2))/2` for even `k`, `s1 (s1^(k-1) + s2^((k-1)/2))/2` for odd.
pub fn root_edge_cycle_index(k: i64) -> Result<CycleIndex> {
    check_range("k", k, 2, i64::from(u32::MAX))?;
    let k = k as u32;
    let alpha = k / 2;
    let mut z = CycleIndex::empty(k);
    z.add_term(cycle_type(&[(1, k)]), ratio(1, 2));
    let reflected = if k.is_multiple_of(2) {
        cycle_type(&[(2, alpha)])
    } else {
        cycle_type(&[(1, 1), (2, alpha)])
    };
    z.add_term(reflected, ratio(1, 2));
    Ok(z)
}

/// Cycle index of the dihedral group of order `2k` acting on the `k` edges
/// of a `k`-gon.
pub fn dihedral_cycle_index(k: i64) -> Result<CycleIndex> {
    check_range("k", k, 3, i64::from(u32::MAX))?;
    let k = k as u32;
    let mut z = CycleIndex::empty(k);
    for r in (1..=k).filter(|r| k.is_multiple_of(*r)) {
        z.add_term(
            cycle_type(&[(r, k / r)]),
            ratio(totient(r).into(), 2 * i64::from(k)),
        );
    }
    let alpha = k / 2;
    if k.is_multiple_of(2) {
        z.add_term(cycle_type(&[(1, 2), (2, alpha - 1)]), ratio(1, 4));
        z.add_term(cycle_type(&[(2, alpha)]), ratio(1, 4));
    } else {
        z.add_term(cycle_type(&[(1, 1), (2, alpha)]), ratio(1, 2));
    }
    Ok(z)
}

/// Cycle index of the symmetric group on `n` sites, from
/// `Z(S_n) = (1/n) sum_r s_r Z(S_{n-r})`.
pub fn symmetric_cycle_index(n: i64) -> Result<CycleIndex> {
    check_range("n", n, 0, 64)?;
    let n = n as u32;
    let mut table: Vec<CycleIndex> = Vec::with_capacity(n as usize + 1);
    let mut z0 = CycleIndex::empty(0);
    z0.add_term(CycleType::new(), BigRational::one());
    table.push(z0);
    for m in 1..=n {
        let mut z = CycleIndex::empty(m);
        for r in 1..=m {
            for (ct, c) in &table[(m - r) as usize].terms {
                let mut ct = ct.clone();
                push_cycles(&mut ct, r, 1);
                z.add_term(ct, c * ratio(1, m.into()));
            }
        }
        table.push(z);
    }
    Ok(table.pop().expect("table holds Z(S_0)"))
}

/// Pólya substitution `Z[figure]`: each `s_r` becomes the figure series with
/// every variable raised to the `r`-th power.
pub fn plethysm<T, S>(z: &CycleIndex, figure: &S) -> Result<S>
where
    T: Scalar,
    S: TruncatedSeries<T>,
{
    Substituter::new(figure.clone()).apply(z)
}

/// Reusable plethysm against one figure series, caching `figure(v^r)^e`
/// across cycle indices.
pub struct Substituter<S> {
    figure: S,
    substituted: HashMap<u32, S>,
    powers: HashMap<(u32, u32), S>,
}

impl<S> Substituter<S> {
    pub fn new(figure: S) -> Self {
        Substituter {
            figure,
            substituted: HashMap::new(),
            powers: HashMap::new(),
        }
    }

    fn power<T: Scalar>(&mut self, r: u32, e: u32) -> Result<&S>
    where
        S: TruncatedSeries<T>,
    {
        if !self.powers.contains_key(&(r, e)) {
            if !self.substituted.contains_key(&r) {
                let sub = self.figure.power_substitute(i64::from(r))?;
                self.substituted.insert(r, sub);
            }
            let p = self.substituted[&r].pow(e)?;
            self.powers.insert((r, e), p);
        }
        Ok(&self.powers[&(r, e)])
    }

    pub fn apply<T: Scalar>(&mut self, z: &CycleIndex) -> Result<S>
    where
        S: TruncatedSeries<T>,
    {
        let mut total = self.figure.zero_like();
        for (ct, c) in &z.terms {
            let mut term = self.figure.one_like();
            for &(r, e) in ct {
                term = term.mul(self.power::<T>(r, e)?)?;
                if term.is_zero_series() {
                    break;
                }
            }
            total = total.add(&term.scale(&T::from_rational(c)))?;
        }
        Ok(total)
    }
}
