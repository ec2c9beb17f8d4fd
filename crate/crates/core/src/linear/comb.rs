use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};

/// Finitely supported linear combination of basis keys.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comb<T: Ord>(BTreeMap<T, Scalar>);

/// Coordinates with respect to a numbered basis.
pub type Vector = Comb<usize>;

impl<T: Ord> Default for Comb<T> {
    fn default() -> Self {
        Comb(BTreeMap::new())
    }
}

impl<T: Ord + Clone> Comb<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: T) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: T, coeff: Scalar) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (T, Scalar)>) -> Self {
        let mut c = Self::zero();
        for (k, v) in terms {
            c.add_term(k, v);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, key: &T) -> Scalar {
        self.0.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn get(&self, key: &T) -> Option<&Scalar> {
        self.0.get(key)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&T, &Scalar)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &T> {
        self.0.keys()
    }

    pub fn first_key(&self) -> Option<&T> {
        self.0.keys().next()
    }

    pub fn add_term(&mut self, key: T, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.0.get_mut(&key) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.0.remove(&key);
                }
            }
            None => {
                self.0.insert(key, coeff);
            }
        }
    }

    /// `self += c · other`
    pub fn axpy(&mut self, c: &Scalar, other: &Comb<T>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.0 {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Comb(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    /// Extends `f` linearly from basis keys.
    pub fn map_basis<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> Comb<U>) -> Comb<U> {
        let mut out = Comb::zero();
        for (k, v) in &self.0 {
            out.axpy(v, &f(k));
        }
        out
    }

    /// Extends `f` bilinearly.
    pub fn bilinear<U: Ord + Clone, V: Ord + Clone>(
        &self,
        other: &Comb<U>,
        mut f: impl FnMut(&T, &U) -> Comb<V>,
    ) -> Comb<V> {
        let mut out = Comb::zero();
        for (k, v) in &self.0 {
            for (l, w) in &other.0 {
                out.axpy(&(v * w), &f(k, l));
            }
        }
        out
    }

    pub fn tensor<U: Ord + Clone>(&self, other: &Comb<U>) -> Comb<(T, U)> {
        self.bilinear(other, |a, b| Comb::basis((a.clone(), b.clone())))
    }

    pub fn relabel<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> Comb<U> {
        Comb::from_terms(self.0.iter().map(|(k, v)| (f(k), v.clone())))
    }

    /// Keeps only the terms whose key satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&T) -> bool) -> Self {
        Comb(self.0.iter().filter(|(k, _)| keep(k)).map(|(k, v)| (k.clone(), v.clone())).collect())
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Scalar {
        self.0.values().fold(Scalar::zero(), |a, b| a + b)
    }

    /// Renders with a caller-supplied key formatter.
    pub fn render(&self, mut key: impl FnMut(&T) -> String) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| {
                if v.is_one() {
                    key(k)
                } else {
                    format!("{}·{}", format_scalar(v), key(k))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<T: Ord + Clone> Add for &Comb<T> {
    type Output = Comb<T>;
    fn add(self, rhs: &Comb<T>) -> Comb<T> {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl<T: Ord + Clone> Sub for &Comb<T> {
    type Output = Comb<T>;
    fn sub(self, rhs: &Comb<T>) -> Comb<T> {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), rhs);
        out
    }
}

impl<T: Ord + Clone> Neg for &Comb<T> {
    type Output = Comb<T>;
    fn neg(self) -> Comb<T> {
        self.scaled(&-Scalar::one())
    }
}

impl<T: Ord + Clone + fmt::Debug> fmt::Debug for Comb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("{k:?}")))
    }
}

impl<T: Ord + Clone> FromIterator<(T, Scalar)> for Comb<T> {
    fn from_iter<I: IntoIterator<Item = (T, Scalar)>>(iter: I) -> Self {
        Comb::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    #[test]
    fn cancellation_drops_keys() {
        let mut c = Comb::term(1usize, int(2));
        c.add_term(1, int(-2));
        assert!(c.is_zero());
        assert_eq!(c, Comb::zero());
    }

    #[test]
    fn bilinear_distributes() {
        let x = Comb::from_terms([(0usize, int(1)), (1, int(2))]);
        let y = Comb::from_terms([(0usize, int(3))]);
        let t = x.tensor(&y);
        assert_eq!(t.coeff(&(1, 0)), int(6));
        assert_eq!(t.len(), 2);
    }
}
