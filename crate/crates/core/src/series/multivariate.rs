use std::collections::BTreeMap;
use std::sync::Arc;

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A sparse series over named variables, each truncated at its own degree.
///
/// Exponent vectors follow the order of `variables()`. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivariate<T> {
    variables: Arc<Vec<String>>,
    bounds: Arc<Vec<u32>>,
    coeffs: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Multivariate<T> {
    /// The zero series over `variables`, truncated at `bounds` componentwise.
    pub fn zero(variables: Vec<String>, bounds: Vec<u32>) -> Self {
        assert_eq!(variables.len(), bounds.len(), "one bound per variable");
        Multivariate {
            variables: Arc::new(variables),
            bounds: Arc::new(bounds),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    fn within(&self, exps: &[u32]) -> bool {
        exps.len() == self.bounds.len() && exps.iter().zip(self.bounds.iter()).all(|(e, b)| e <= b)
    }

    /// `c * prod var^exp`, or zero beyond the bounds.
    pub fn monomial_like(&self, exps: Vec<u32>, c: T) -> Self {
        let mut s = self.zero_like();
        if self.within(&exps) && !c.is_zero() {
            s.coeffs.insert(exps, c);
        }
        s
    }

    /// The single variable `name` as a series.
    pub fn variable(&self, name: &str) -> Self {
        let i = self
            .variable_index(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut exps = vec![0; self.arity()];
        exps[i] = 1;
        self.monomial_like(exps, T::one())
    }

    pub fn coefficient(&self, exps: &[u32]) -> Result<T> {
        if !self.within(exps) {
            return Err(Error::OutOfBounds {
                exponents: exps.to_vec(),
                bounds: self.bounds.as_ref().clone(),
            });
        }
        Ok(self.coeffs.get(exps).cloned().unwrap_or_else(T::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> + '_ {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_bounds(&self, other: &Self) -> Result<()> {
        if self.bounds != other.bounds || self.variables != other.variables {
            return Err(Error::MismatchedBounds {
                left: self.bounds.as_ref().clone(),
                right: other.bounds.as_ref().clone(),
            });
        }
        Ok(())
    }

    fn insert_add(map: &mut BTreeMap<Vec<u32>, T>, key: Vec<u32>, c: T) {
        match map.get_mut(&key) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    map.remove(&key);
                }
            }
            None => {
                if !c.is_zero() {
                    map.insert(key, c);
                }
            }
        }
    }
}

impl<T: Scalar> TruncatedSeries<T> for Multivariate<T> {
    fn bounds(&self) -> Vec<u32> {
        self.bounds.as_ref().clone()
    }

    fn zero_like(&self) -> Self {
        Multivariate {
            variables: Arc::clone(&self.variables),
            bounds: Arc::clone(&self.bounds),
            coeffs: BTreeMap::new(),
        }
    }

    fn one_like(&self) -> Self {
        self.monomial_like(vec![0; self.arity()], T::one())
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            Self::insert_add(&mut out.coeffs, k.clone(), v.clone());
        }
        Ok(out)
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            Self::insert_add(&mut out.coeffs, k.clone(), T::zero() - v.clone());
        }
        Ok(out)
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.check_bounds(other)?;
        let mut out = self.zero_like();
        let mut key = vec![0u32; self.arity()];
        for (ka, a) in &self.coeffs {
            'inner: for (kb, b) in &other.coeffs {
                for i in 0..key.len() {
                    key[i] = ka[i] + kb[i];
                    if key[i] > self.bounds[i] {
                        continue 'inner;
                    }
                }
                Self::insert_add(&mut out.coeffs, key.clone(), a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    fn scale(&self, c: &T) -> Self {
        let mut out = self.zero_like();
        if c.is_zero() {
            return out;
        }
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
            .collect();
        out
    }

    fn power_substitute(&self, r: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::NonPositivePower(r));
        }
        let r = r as u32;
        let mut out = self.zero_like();
        for (k, v) in &self.coeffs {
            let key: Vec<u32> = k.iter().map(|e| e * r).collect();
            if self.within(&key) {
                out.coeffs.insert(key, v.clone());
            }
        }
        Ok(out)
    }

    fn geom_reciprocal(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Powers of a series without constant term gain degree each step,
        // so the sum is finite under truncation.
        let mut acc = self.one_like();
        let mut power = self.one_like();
        loop {
            power = power.mul(self)?;
            if power.is_zero_series() {
                return Ok(acc);
            }
            acc = acc.add(&power)?;
        }
    }

    fn constant_term(&self) -> T {
        self.coeffs
            .get(&vec![0; self.arity()])
            .cloned()
            .unwrap_or_else(T::zero)
    }

    fn is_zero_series(&self) -> bool {
        self.coeffs.is_empty()
    }
}
