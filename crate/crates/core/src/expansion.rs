//! Operations defined by expansion templates, and expansion of tree
//! monomials into free associative, dialgebra, or binary nonassociative
//! bases.

use std::fmt;
use std::hash::Hash;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::basis::TreeBasis;
use crate::dialgebra::{DiMonomial, DiPoly};
use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::linalg::DenseMatrix;
use crate::parse::parse_identity;
use crate::perm::{factorial, letter, rank_sequence, unrank_sequence, Permutation};
use crate::poly::{format_signed_sum, MultiPoly};
use crate::term::{Signature, Term, TermPoly};

/// Associative words.
pub type Word = Vec<u8>;
pub type AssocPoly = MultiPoly<Word>;

/// A multilinear operation in an associative algebra: an element of the
/// group algebra, `sum x_sigma a_sigma(1) ... a_sigma(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraOp {
    pub arity: usize,
    pub terms: Vec<(Permutation, Coeff)>,
}

/// A multilinear dialgebra operation: a combination of normal forms
/// `a_sigma(1) .. ^a_sigma(j) .. a_sigma(n)` stored as `(sigma, j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiOpTemplate {
    pub arity: usize,
    pub terms: Vec<(Permutation, usize, Coeff)>,
}

/// A multilinear operation written in a binary nonassociative product.
#[derive(Clone, Debug, PartialEq)]
pub struct NonassocOpTemplate {
    pub arity: usize,
    pub poly: TermPoly,
}

fn split_signed(src: &str) -> Result<Vec<(Coeff, String)>> {
    let mut out = Vec::new();
    let mut sign = Coeff::one();
    let mut cur = String::new();
    let mut start = true;
    for (off, ch) in src.char_indices() {
        match ch {
            '+' | '-' | '−' => {
                if !cur.trim().is_empty() {
                    out.push((sign, std::mem::take(&mut cur)));
                } else if !start {
                    return Err(Error::Parse {
                        offset: off,
                        message: "missing term".into(),
                    });
                }
                sign = if ch == '+' {
                    Coeff::one()
                } else {
                    -Coeff::one()
                };
                cur.clear();
                start = false;
            }
            _ => cur.push(ch),
        }
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse {
            offset: src.len(),
            message: "missing term".into(),
        });
    }
    out.push((sign, cur));
    out.into_iter()
        .map(|(s, t)| {
            let t = t.trim();
            let digits = t
                .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                .unwrap_or(t.len());
            let (num, rest) = t.split_at(digits);
            let c = if num.is_empty() {
                Coeff::one()
            } else {
                parse_coeff(num).ok_or(Error::Parse {
                    offset: 0,
                    message: format!("bad coefficient {num:?}"),
                })?
            };
            Ok((s * c, rest.trim_start_matches('*').trim().to_string()))
        })
        .collect()
}

fn parse_coeff(s: &str) -> Option<Coeff> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().ok()?;
            let d: i64 = d.parse().ok()?;
            (d != 0).then(|| Coeff::new(n, d))
        }
        None => Some(Coeff::from_integer(s.parse().ok()?)),
    }
}

fn check_word(word: &[u8], arity: &mut Option<usize>, src: &str) -> Result<Permutation> {
    let n = *arity.get_or_insert(word.len());
    if word.len() != n {
        return Err(Error::NotMultilinear(format!(
            "terms of different degree in {src:?}"
        )));
    }
    Permutation::from_images(word.to_vec()).map_err(|_| Error::NotMultilinear(format!("{src:?}")))
}

impl GroupAlgebraOp {
    /// Parses a signed list of words such as `abc+cba` or `ab-ba`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut arity = None;
        let mut poly: MultiPoly<Permutation> = MultiPoly::zero();
        for (c, w) in split_signed(src)? {
            let word: Vec<u8> = w
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c as u8 - b'a')
                .collect();
            if w.chars()
                .any(|c| !(c.is_ascii_lowercase() || c.is_whitespace()))
            {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("bad word {w:?}"),
                });
            }
            poly.add_term(check_word(&word, &mut arity, src)?, c);
        }
        Ok(GroupAlgebraOp {
            arity: arity.unwrap_or(0),
            terms: poly.iter().map(|(p, c)| (p.clone(), *c)).collect(),
        })
    }

    /// The template as a polynomial in words on `a, b, ...`.
    pub fn as_poly(&self) -> AssocPoly {
        AssocPoly::from_terms(self.terms.iter().map(|(p, c)| (p.images().to_vec(), *c)))
    }
}

impl fmt::Display for GroupAlgebraOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_signed_sum(
            self.terms.iter().map(|(p, c)| (p, c)),
            |p| p.letters(),
        ))
    }
}

impl DiOpTemplate {
    /// Parses hat notation such as `^abc + cb^a`.
    pub fn parse(src: &str) -> Result<Self> {
        let mut arity = None;
        let mut terms: Vec<(Permutation, usize, Coeff)> = Vec::new();
        for (c, w) in split_signed(src)? {
            let m = DiMonomial::parse(&w)?;
            let perm = check_word(m.word(), &mut arity, src)?;
            match terms
                .iter_mut()
                .find(|(p, j, _)| *p == perm && *j == m.center())
            {
                Some(t) => t.2 += c,
                None => terms.push((perm, m.center(), c)),
            }
        }
        terms.retain(|t| !t.2.is_zero());
        Ok(DiOpTemplate {
            arity: arity.unwrap_or(0),
            terms,
        })
    }

    pub fn as_poly(&self) -> DiPoly {
        DiPoly::from_terms(self.terms.iter().map(|(p, j, c)| {
            (
                DiMonomial::new(p.images().to_vec(), *j).expect("hat slot within arity"),
                *c,
            )
        }))
    }

    /// The special Jordan product `a ⊣ b + b ⊢ a`.
    pub fn special_jordan_product() -> Self {
        Self::parse("^ab + b^a").expect("valid template")
    }
}

impl fmt::Display for DiOpTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly())
    }
}

impl NonassocOpTemplate {
    /// Parses a polynomial in the binary product such as
    /// `(ab)c - (ac)b + a(bc)`.
    pub fn parse(src: &str) -> Result<Self> {
        let poly = parse_identity(src, &Signature::binary())?;
        let arity = poly.monomials().next().map_or(0, Term::degree);
        Ok(NonassocOpTemplate { arity, poly })
    }
}

impl fmt::Display for NonassocOpTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Signature::binary().format_poly(&self.poly))
    }
}

fn check_arity(arity: usize, found: usize, op: usize) -> Result<()> {
    if arity != found {
        return Err(Error::ArityMismatch {
            op: op + 1,
            expected: arity,
            found,
        });
    }
    Ok(())
}

/// Applies a dialgebra template: argument words are concatenated in slot
/// order and the center is the center of the argument in the hatted slot.
pub fn substitute_di(template: &DiOpTemplate, args: &[DiPoly]) -> Result<DiPoly> {
    check_arity(template.arity, args.len(), 0)?;
    let mut out = DiPoly::zero();
    let lists: Vec<Vec<(&DiMonomial, &Coeff)>> = args.iter().map(|a| a.iter().collect()).collect();
    for (sigma, hat, coeff) in &template.terms {
        let mut idx = vec![0usize; args.len()];
        if lists.iter().any(Vec::is_empty) {
            continue;
        }
        loop {
            let mut word = Vec::new();
            let mut center = 0;
            let mut c = *coeff;
            for slot in 0..template.arity {
                let arg = sigma.apply(slot);
                let (m, mc) = lists[arg][idx[arg]];
                if slot == *hat {
                    center = word.len() + m.center();
                }
                word.extend_from_slice(m.word());
                c *= *mc;
            }
            out.add_term(DiMonomial::new(word, center)?, c);
            // odometer over argument monomials
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < lists[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Applies an associative operation by concatenating argument words.
pub fn substitute_assoc(op: &GroupAlgebraOp, args: &[AssocPoly]) -> Result<AssocPoly> {
    check_arity(op.arity, args.len(), 0)?;
    let mut out = AssocPoly::zero();
    for (sigma, coeff) in &op.terms {
        let mut acc = AssocPoly::monomial(Vec::new());
        for slot in 0..op.arity {
            acc = acc.combine(&args[sigma.apply(slot)], |x, y| {
                let mut w = x.clone();
                w.extend_from_slice(y);
                w
            });
        }
        out.add_scaled(&acc, *coeff);
    }
    Ok(out)
}

/// Grafts the arguments into a binary-product template.
pub fn substitute_nonassoc(template: &NonassocOpTemplate, args: &[TermPoly]) -> Result<TermPoly> {
    check_arity(template.arity, args.len(), 0)?;
    Ok(template.poly.flat_map(|t| t.substitute(args)))
}

/// Forgets the centers of dialgebra monomials.
pub fn erase_centers(p: &DiPoly) -> AssocPoly {
    p.map_monomials(|m| m.word().to_vec())
}

/// Interpretation of the operations of a signature in some free target
/// algebra with a multilinear basis.
pub trait Expander: Sync {
    type Mono: Hash + Eq + Clone + Send + Sync;

    fn op_count(&self) -> usize;
    fn variable(&self, v: u8) -> MultiPoly<Self::Mono>;
    fn apply(&self, op: usize, args: &[MultiPoly<Self::Mono>]) -> Result<MultiPoly<Self::Mono>>;
    /// Number of multilinear target monomials of the given degree.
    fn target_dim(&self, degree: usize) -> usize;
    fn target_index(&self, m: &Self::Mono) -> Result<usize>;
    fn target_label(&self, degree: usize, i: usize) -> String;

    fn expand(&self, t: &Term) -> Result<MultiPoly<Self::Mono>> {
        match t {
            Term::Var(v) => Ok(self.variable(*v)),
            Term::Op(k, ch) => {
                if *k >= self.op_count() {
                    return Err(Error::UnboundOperation(k + 1));
                }
                let args = ch
                    .iter()
                    .map(|c| self.expand(c))
                    .collect::<Result<Vec<_>>>()?;
                self.apply(*k, &args)
            }
        }
    }

    fn expand_poly(&self, p: &TermPoly) -> Result<MultiPoly<Self::Mono>> {
        let mut out = MultiPoly::zero();
        for (t, c) in p.iter() {
            out.add_scaled(&self.expand(t)?, *c);
        }
        Ok(out)
    }

    /// Coefficient vector of the expansion of `p` in the target basis.
    fn expansion_vector<F: Field>(
        &self,
        field: &F,
        degree: usize,
        p: &TermPoly,
    ) -> Result<Vec<F::Elem>> {
        let mut v = vec![field.zero(); self.target_dim(degree)];
        for (m, c) in self.expand_poly(p)?.iter() {
            let i = self.target_index(m)?;
            v[i] = field.add(&v[i], &field.from_coeff(c)?);
        }
        Ok(v)
    }
}

/// Operations in the free associative dialgebra.
#[derive(Clone, Debug)]
pub struct DiExpander {
    pub ops: Vec<DiOpTemplate>,
}

impl Expander for DiExpander {
    type Mono = DiMonomial;

    fn op_count(&self) -> usize {
        self.ops.len()
    }

    fn variable(&self, v: u8) -> DiPoly {
        DiPoly::monomial(DiMonomial::variable(v))
    }

    fn apply(&self, op: usize, args: &[DiPoly]) -> Result<DiPoly> {
        check_arity(self.ops[op].arity, args.len(), op)?;
        substitute_di(&self.ops[op], args)
    }

    fn target_dim(&self, degree: usize) -> usize {
        degree * factorial(degree)
    }

    fn target_index(&self, m: &DiMonomial) -> Result<usize> {
        Permutation::from_images(m.word().to_vec())
            .map_err(|_| Error::NotMultilinear(m.to_string()))?;
        Ok(m.index())
    }

    fn target_label(&self, degree: usize, i: usize) -> String {
        let f = factorial(degree);
        DiMonomial::new(unrank_sequence(degree, i % f), i / f)
            .expect("center in range")
            .to_string()
    }
}

/// Operations in the free associative algebra.
#[derive(Clone, Debug)]
pub struct AssocExpander {
    pub ops: Vec<GroupAlgebraOp>,
}

impl Expander for AssocExpander {
    type Mono = Word;

    fn op_count(&self) -> usize {
        self.ops.len()
    }

    fn variable(&self, v: u8) -> AssocPoly {
        AssocPoly::monomial(vec![v])
    }

    fn apply(&self, op: usize, args: &[AssocPoly]) -> Result<AssocPoly> {
        check_arity(self.ops[op].arity, args.len(), op)?;
        substitute_assoc(&self.ops[op], args)
    }

    fn target_dim(&self, degree: usize) -> usize {
        factorial(degree)
    }

    fn target_index(&self, m: &Word) -> Result<usize> {
        Permutation::from_images(m.clone()).map_err(|_| Error::NotMultilinear(format!("{m:?}")))?;
        Ok(rank_sequence(m))
    }

    fn target_label(&self, degree: usize, i: usize) -> String {
        unrank_sequence(degree, i).into_iter().map(letter).collect()
    }
}

/// Operations written in a binary nonassociative product, expanded into the
/// unreduced binary basis of one degree.
#[derive(Clone, Debug)]
pub struct NonassocExpander {
    pub ops: Vec<NonassocOpTemplate>,
    target: TreeBasis,
}

impl NonassocExpander {
    pub fn new(ops: Vec<NonassocOpTemplate>, degree: usize) -> Result<Self> {
        Ok(NonassocExpander {
            ops,
            target: TreeBasis::full(&Signature::binary(), degree)?,
        })
    }

    pub fn target_basis(&self) -> &TreeBasis {
        &self.target
    }
}

impl Expander for NonassocExpander {
    type Mono = Term;

    fn op_count(&self) -> usize {
        self.ops.len()
    }

    fn variable(&self, v: u8) -> TermPoly {
        TermPoly::monomial(Term::Var(v))
    }

    fn apply(&self, op: usize, args: &[TermPoly]) -> Result<TermPoly> {
        substitute_nonassoc(&self.ops[op], args).map_err(|e| match e {
            Error::ArityMismatch {
                expected, found, ..
            } => Error::ArityMismatch {
                op: op + 1,
                expected,
                found,
            },
            e => e,
        })
    }

    fn target_dim(&self, degree: usize) -> usize {
        debug_assert_eq!(degree, self.target.degree());
        self.target.len()
    }

    fn target_index(&self, m: &Term) -> Result<usize> {
        self.target.index_of(m)
    }

    fn target_label(&self, _degree: usize, i: usize) -> String {
        self.target.label(i)
    }
}

/// Entry `(i, j)` is the coefficient of target monomial `i` in the expansion
/// of source monomial `j`.
#[derive(Clone, Debug)]
pub struct ExpansionMatrix<F: Field> {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub matrix: DenseMatrix<F>,
}

impl<F: Field> ExpansionMatrix<F> {
    /// Tab-separated table with row and column labels; entries in the
    /// field's display form.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("monomial");
        for c in &self.col_labels {
            s.push('\t');
            s.push_str(c);
        }
        s.push('\n');
        for (i, r) in self.row_labels.iter().enumerate() {
            s.push_str(r);
            for x in self.matrix.row(i) {
                s.push('\t');
                s.push_str(&self.matrix.field().format(x));
            }
            s.push('\n');
        }
        s
    }
}

/// Expands every monomial of `source` into the target basis of `expander`.
/// Columns are computed in parallel and assembled in basis order.
pub fn build_expansion_matrix<F: Field, E: Expander>(
    field: &F,
    source: &TreeBasis,
    expander: &E,
) -> Result<ExpansionMatrix<F>> {
    let degree = source.degree();
    let cols: Vec<Vec<F::Elem>> = (0..source.len())
        .into_par_iter()
        .map(|j| expander.expansion_vector(field, degree, &TermPoly::monomial(source.monomial(j))))
        .collect::<Result<_>>()?;
    let rows = expander.target_dim(degree);
    let mut m = DenseMatrix::zeros(field.clone(), rows, source.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            if !field.is_zero(&x) {
                m.set(i, j, x);
            }
        }
    }
    Ok(ExpansionMatrix {
        row_labels: (0..rows)
            .map(|i| expander.target_label(degree, i))
            .collect(),
        col_labels: (0..source.len()).map(|j| source.label(j)).collect(),
        matrix: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialgebra::DiTree;
    use crate::field::PrimeField;
    use crate::linalg::rcf;

    fn jordan_diproducts() -> DiExpander {
        DiExpander {
            ops: vec![
                DiOpTemplate::parse("^abc + cb^a").unwrap(),
                DiOpTemplate::parse("a^bc + c^ba").unwrap(),
            ],
        }
    }

    fn di(s: &str) -> DiPoly {
        let mut p = DiPoly::zero();
        for (c, w) in split_signed(s).unwrap() {
            p.add_term(DiMonomial::parse(&w).unwrap(), c);
        }
        p
    }

    #[test]
    fn displayed_diproduct_expansions() {
        let sig = Signature::uniform(2, 3);
        let e = jordan_diproducts();
        let cases = [
            ("((a,b,c)_1,d,e)_1", "^abcde + cb^ade + ed^abc + edcb^a"),
            ("(a,(b,c,d)_1,e)_1", "^abcde + ^adcbe + ebcd^a + edcb^a"),
            ("(a,b,(c,d,e)_1)_1", "^abcde + ^abedc + cdeb^a + edcb^a"),
            ("((a,b,c)_2,d,e)_2", "abc^de + cba^de + e^dabc + e^dcba"),
            ("(a,(b,c,d)_2,e)_2", "ab^cde + ad^cbe + eb^cda + ed^cba"),
            ("(a,b,c)_2", "a^bc + c^ba"),
        ];
        for (src, expected) in cases {
            let t = parse_identity(src, &sig).unwrap();
            assert_eq!(e.expand_poly(&t).unwrap(), di(expected), "{src}");
        }
    }

    #[test]
    fn degree_three_operation_one_matrix() {
        let f = PrimeField::new(101).unwrap();
        let b = TreeBasis::full(&Signature::uniform(1, 3), 3).unwrap();
        let e = DiExpander {
            ops: vec![DiOpTemplate::parse("^abc + cb^a").unwrap()],
        };
        let m = build_expansion_matrix(&f, &b, &e).unwrap();
        assert_eq!(m.matrix.shape(), (18, 6));
        assert_eq!(rcf(&m.matrix).rank, 6);
        assert_eq!(m.row_labels[17], "c b ^a");
    }

    #[test]
    fn arity_and_binding_errors() {
        let t = DiOpTemplate::parse("^abc").unwrap();
        assert!(matches!(
            substitute_di(&t, &[di("^a")]),
            Err(Error::ArityMismatch { .. })
        ));
        let e = DiExpander { ops: vec![t] };
        let term = Term::op(1, vec![Term::var(0), Term::var(1), Term::var(2)]);
        assert!(matches!(e.expand(&term), Err(Error::UnboundOperation(2))));
    }

    #[test]
    fn special_product_through_trees() {
        // ab = a ⊣ b + b ⊢ a, checked against explicit dialgebra trees
        let j = DiOpTemplate::special_jordan_product();
        let ab = substitute_di(&j, &[di("^a"), di("^b")]).unwrap();
        let left = DiTree::left(DiTree::leaf(0), DiTree::leaf(1)).normal_form();
        let right = DiTree::right(DiTree::leaf(1), DiTree::leaf(0)).normal_form();
        assert_eq!(
            ab,
            DiPoly::from_terms([(left, Coeff::one()), (right, Coeff::one())])
        );
    }

    #[test]
    fn word_templates() {
        let w = GroupAlgebraOp::parse("abc+cba").unwrap();
        assert_eq!(w.arity, 3);
        assert_eq!(w.to_string(), "abc + cba");
        assert!(GroupAlgebraOp::parse("ab+abc").is_err());
        assert!(GroupAlgebraOp::parse("aa").is_err());
        let lie = GroupAlgebraOp::parse("ab - ba").unwrap();
        let x = substitute_assoc(
            &lie,
            &[
                AssocPoly::monomial(vec![0]),
                AssocPoly::monomial(vec![1, 2]),
            ],
        )
        .unwrap();
        assert_eq!(x.len(), 2);
    }

    #[test]
    fn nonassoc_templates() {
        let t1 = NonassocOpTemplate::parse("(ab)c - (ac)b + a(bc)").unwrap();
        let sig = Signature::binary();
        let args: Vec<TermPoly> = (0..3).map(|v| TermPoly::monomial(Term::var(v))).collect();
        assert_eq!(
            sig.format_poly(&substitute_nonassoc(&t1, &args).unwrap()),
            "(ab)c - (ac)b + a(bc)"
        );
    }
}
