use std::fmt;
use std::hash::Hash;

use indexmap::IndexMap;
use num_traits::{One, Signed, Zero};

use crate::field::Coeff;

/// Sparse linear combination of monomials with exact coefficients.
///
/// Terms keep their insertion order; equality ignores it.
#[derive(Clone)]
pub struct MultiPoly<M: Hash + Eq> {
    terms: IndexMap<M, Coeff>,
}

impl<M: Hash + Eq> PartialEq for MultiPoly<M> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<M: Hash + Eq> Eq for MultiPoly<M> {}

impl<M: Hash + Eq> Default for MultiPoly<M> {
    fn default() -> Self {
        MultiPoly {
            terms: IndexMap::new(),
        }
    }
}

impl<M: Hash + Eq + Clone> MultiPoly<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, Coeff::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, Coeff)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: M, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.shift_remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: Coeff) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), *v * c);
        }
    }

    pub fn add(&mut self, other: &Self) {
        self.add_scaled(other, Coeff::one());
    }

    pub fn sub(&mut self, other: &Self) {
        self.add_scaled(other, -Coeff::one());
    }

    pub fn scaled(&self, c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_scaled(self, c);
        p
    }

    pub fn neg(&self) -> Self {
        self.scaled(-Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Coeff {
        self.terms.get(m).copied().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &Coeff)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    /// Applies `f` to every monomial and collects like terms.
    pub fn map_monomials<N: Hash + Eq + Clone>(&self, mut f: impl FnMut(&M) -> N) -> MultiPoly<N> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), *c)))
    }

    /// Expands every monomial into a polynomial and sums the results.
    pub fn flat_map<N: Hash + Eq + Clone>(
        &self,
        mut f: impl FnMut(&M) -> MultiPoly<N>,
    ) -> MultiPoly<N> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), *c);
        }
        out
    }

    /// Product of polynomials under a bilinear monomial product.
    pub fn combine<N, O>(
        &self,
        other: &MultiPoly<N>,
        mut f: impl FnMut(&M, &N) -> O,
    ) -> MultiPoly<O>
    where
        N: Hash + Eq + Clone,
        O: Hash + Eq + Clone,
    {
        let mut out = MultiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in other.iter() {
                out.add_term(f(a, b), *ca * *cb);
            }
        }
        out
    }
}

/// Writes `terms` as a signed sum using `show` for monomials.
pub fn format_signed_sum<'a, M: 'a>(
    terms: impl Iterator<Item = (&'a M, &'a Coeff)>,
    mut show: impl FnMut(&M) -> String,
) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&show(m));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<M: Hash + Eq + Clone + fmt::Display> fmt::Display for MultiPoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_signed_sum(self.terms.iter(), |m| m.to_string()))
    }
}

impl<M: Hash + Eq + Clone + fmt::Display> fmt::Debug for MultiPoly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collects_and_cancels() {
        let mut p = MultiPoly::monomial("x");
        p.add_term("y", Coeff::from_integer(2));
        p.add_term("x", Coeff::from_integer(-1));
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&"y"), Coeff::from_integer(2));
        assert_eq!(p.to_string(), "2 y");
        let q = MultiPoly::from_terms([("y", Coeff::from_integer(2))]);
        assert_eq!(p, q);
    }

    #[test]
    fn equality_ignores_order() {
        let a = MultiPoly::from_terms([("x", Coeff::one()), ("y", -Coeff::one())]);
        let b = MultiPoly::from_terms([("y", -Coeff::one()), ("x", Coeff::one())]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x - y");
    }
}
