//! Symmetry-reduced bases of multilinear tree monomials.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::perm::{factorial, rank_sequence, Permutation};
use crate::term::{Shape, Signature, Term, TermPoly};

/// The multilinear monomials of one degree over a list of association
/// types, one per orbit of each type's leaf symmetry group. Monomials are
/// ordered by type, then by the (lexicographically least) word.
#[derive(Clone, Debug)]
pub struct TreeBasis {
    sig: Signature,
    degree: usize,
    types: Vec<Shape>,
    groups: Vec<Vec<Permutation>>,
    monomials: Vec<(usize, Vec<u8>)>,
    table: Vec<u32>,
    shape_index: HashMap<Shape, usize>,
}

impl TreeBasis {
    /// Every association type of the signature, symmetries coming from the
    /// operations only.
    pub fn full(sig: &Signature, degree: usize) -> Result<Self> {
        let types = sig.association_types(degree)?;
        Self::new(sig, types, &[])
    }

    /// A basis over the given types. `extra` lists additional leaf-position
    /// transpositions (zero based) imposed on individual types.
    pub fn new(
        sig: &Signature,
        types: Vec<Shape>,
        extra: &[(usize, Vec<(usize, usize)>)],
    ) -> Result<Self> {
        let degree = types.first().map_or(0, Shape::degree);
        if types.iter().any(|t| t.degree() != degree) {
            return Err(Error::Malformed(
                "association types of different degrees".into(),
            ));
        }
        let mut shape_index = HashMap::new();
        for (i, t) in types.iter().enumerate() {
            t.generic().check(sig)?;
            if shape_index.insert(t.clone(), i).is_some() {
                return Err(Error::Malformed(format!(
                    "repeated association type {}",
                    sig.format_term(&t.generic())
                )));
            }
        }
        let mut groups = Vec::with_capacity(types.len());
        for (i, t) in types.iter().enumerate() {
            let mut gens: Vec<Permutation> = t
                .generic()
                .variants(sig)
                .into_iter()
                .filter(|v| v.shape() == *t)
                .map(|v| Permutation::from_images(v.leaves()).expect("leaf permutation"))
                .collect();
            for (ti, swaps) in extra {
                if *ti == i {
                    for &(a, b) in swaps {
                        if a >= degree || b >= degree {
                            return Err(Error::Malformed(format!(
                                "leaf position outside degree {degree}"
                            )));
                        }
                        gens.push(Permutation::transposition(degree, a, b));
                    }
                }
            }
            groups.push(close_group(degree, gens));
        }

        let n_fact = factorial(degree);
        let mut table = vec![0u32; types.len() * n_fact];
        let mut monomials = Vec::new();
        let words = Permutation::all(degree);
        for (t, group) in groups.iter().enumerate() {
            let mut local: HashMap<Vec<u8>, u32> = HashMap::new();
            for (r, w) in words.iter().enumerate() {
                let canon = canonical_word(w.images(), group);
                let idx = *local.entry(canon.clone()).or_insert_with(|| {
                    monomials.push((t, canon));
                    (monomials.len() - 1) as u32
                });
                table[t * n_fact + r] = idx;
            }
        }
        Ok(TreeBasis {
            sig: sig.clone(),
            degree,
            types,
            groups,
            monomials,
            table,
            shape_index,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn types(&self) -> &[Shape] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Monomial count of each association type.
    pub fn type_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.types.len()];
        for (t, _) in &self.monomials {
            c[*t] += 1;
        }
        c
    }

    /// Order of the leaf symmetry group of each type.
    pub fn group_orders(&self) -> Vec<usize> {
        self.groups.iter().map(Vec::len).collect()
    }

    pub fn monomial(&self, i: usize) -> Term {
        let (t, w) = &self.monomials[i];
        self.types[*t].fill(w)
    }

    pub fn type_of(&self, i: usize) -> usize {
        self.monomials[i].0
    }

    pub fn label(&self, i: usize) -> String {
        self.sig.format_term(&self.monomial(i))
    }

    fn lookup(&self, t: usize, word: &[u8]) -> usize {
        self.table[t * factorial(self.degree) + rank_sequence(word)] as usize
    }

    /// Basis index of a multilinear term of this degree, after applying
    /// operation and type symmetries.
    pub fn index_of(&self, term: &Term) -> Result<usize> {
        if term.degree() != self.degree || !term.is_multilinear() {
            return Err(Error::NotInBasis(self.sig.format_term(term)));
        }
        for v in term.variants(&self.sig) {
            if let Some(&t) = self.shape_index.get(&v.shape()) {
                return Ok(self.lookup(t, &v.leaves()));
            }
        }
        Err(Error::NotInBasis(self.sig.format_term(term)))
    }

    /// Relabels the variables of monomial `i` by `sigma` and returns the
    /// index of the resulting orbit representative.
    pub fn act(&self, sigma: &Permutation, i: usize) -> Result<usize> {
        if sigma.degree() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: sigma.degree(),
            });
        }
        let (t, w) = &self.monomials[i];
        let moved: Vec<u8> = w.iter().map(|&v| sigma.apply(v as usize) as u8).collect();
        Ok(self.lookup(*t, &moved))
    }

    /// Precomputed images `act(sigma, i)` for all `i`.
    pub fn action_table(&self, sigma: &Permutation) -> Result<Vec<usize>> {
        (0..self.len()).map(|i| self.act(sigma, i)).collect()
    }

    /// Dense coefficient vector of a polynomial over this basis.
    pub fn coeff_vector(&self, p: &TermPoly) -> Result<Vec<Coeff>> {
        let mut v = vec![Coeff::from_integer(0); self.len()];
        for (t, c) in p.iter() {
            v[self.index_of(t)?] += *c;
        }
        Ok(v)
    }

    pub fn field_vector<F: Field>(&self, field: &F, p: &TermPoly) -> Result<Vec<F::Elem>> {
        let mut v = vec![field.zero(); self.len()];
        for (t, c) in p.iter() {
            let i = self.index_of(t)?;
            v[i] = field.add(&v[i], &field.from_coeff(c)?);
        }
        Ok(v)
    }

    /// The polynomial with the given coefficient vector.
    pub fn poly_of<F: Field>(&self, field: &F, v: &[F::Elem]) -> TermPoly {
        TermPoly::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !field.is_zero(x))
                .map(|(i, x)| (self.monomial(i), field.to_coeff(x))),
        )
    }

    /// `sigma` applied to a coefficient vector.
    pub fn permute_vector<F: Field>(
        &self,
        field: &F,
        table: &[usize],
        v: &[F::Elem],
    ) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            if !field.is_zero(x) {
                let j = table[i];
                out[j] = field.add(&out[j], x);
            }
        }
        out
    }

    pub fn format_poly(&self, p: &TermPoly) -> String {
        self.sig.format_poly(p)
    }
}

fn close_group(n: usize, gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        let g = out[i].clone();
        for h in &gens {
            let p = g.compose(h);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        i += 1;
    }
    out
}

fn canonical_word(w: &[u8], group: &[Permutation]) -> Vec<u8> {
    group
        .iter()
        .map(|g| (0..w.len()).map(|k| w[g.apply(k)]).collect::<Vec<u8>>())
        .min()
        .expect("group contains the identity")
}
