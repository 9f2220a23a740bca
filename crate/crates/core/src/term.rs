//! Monomials of free multioperator nonassociative algebras.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{letter, Permutation};
use crate::poly::MultiPoly;

/// A monomial: a planar tree whose internal nodes carry operation indices
/// (zero based) and whose leaves carry variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(u8),
    Op(usize, Vec<Term>),
}

/// A linear combination of monomials, read as an identity `≡ 0`.
pub type TermPoly = MultiPoly<Term>;

/// An association type: a term with the leaf labels forgotten.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Shape {
    Leaf,
    Node(usize, Vec<Shape>),
}

impl Shape {
    pub fn degree(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(_, ch) => ch.iter().map(Shape::degree).sum(),
        }
    }

    /// Fills the leaves left to right with the given variables.
    pub fn fill(&self, word: &[u8]) -> Term {
        let mut it = word.iter().copied();
        let t = self.fill_from(&mut it);
        debug_assert!(it.next().is_none(), "word longer than shape");
        t
    }

    fn fill_from(&self, it: &mut impl Iterator<Item = u8>) -> Term {
        match self {
            Shape::Leaf => Term::Var(it.next().expect("word shorter than shape")),
            Shape::Node(op, ch) => Term::Op(*op, ch.iter().map(|c| c.fill_from(it)).collect()),
        }
    }

    /// The term on this shape with leaves `a, b, c, ...` in order.
    pub fn generic(&self) -> Term {
        let w: Vec<u8> = (0..self.degree() as u8).collect();
        self.fill(&w)
    }
}

impl Term {
    pub fn var(v: u8) -> Self {
        Term::Var(v)
    }

    pub fn op(k: usize, args: Vec<Term>) -> Self {
        Term::Op(k, args)
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Op(_, ch) => ch.iter().map(Term::degree).sum(),
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            Term::Var(_) => Shape::Leaf,
            Term::Op(k, ch) => Shape::Node(*k, ch.iter().map(Term::shape).collect()),
        }
    }

    /// Leaf variables, left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8);
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<u8>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Op(_, ch) => ch.iter().for_each(|c| c.push_leaves(out)),
        }
    }

    /// Every leaf variable mapped through `f`.
    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> Term {
        match self {
            Term::Var(v) => Term::Var(f(*v)),
            Term::Op(k, ch) => Term::Op(*k, ch.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    /// Relabels variables: `v -> sigma(v)`.
    pub fn act(&self, sigma: &Permutation) -> Term {
        self.relabel(&|v| sigma.apply(v as usize) as u8)
    }

    /// Replaces each variable `v` by `args[v]`, expanding multilinearly.
    pub fn substitute(&self, args: &[TermPoly]) -> TermPoly {
        match self {
            Term::Var(v) => args[*v as usize].clone(),
            Term::Op(k, ch) => {
                let mut acc = TermPoly::monomial(Term::Op(*k, Vec::new()));
                for c in ch {
                    let sub = c.substitute(args);
                    acc = acc.combine(&sub, |t, s| match t {
                        Term::Op(k, xs) => {
                            let mut xs = xs.clone();
                            xs.push(s.clone());
                            Term::Op(*k, xs)
                        }
                        Term::Var(_) => unreachable!(),
                    });
                }
                acc
            }
        }
    }

    /// Whether the leaves are exactly `0..degree`, each once.
    pub fn is_multilinear(&self) -> bool {
        let leaves = self.leaves();
        let mut seen = vec![false; leaves.len()];
        leaves.iter().all(|&v| {
            let v = v as usize;
            v < seen.len() && !std::mem::replace(&mut seen[v], true)
        })
    }

    /// All terms equal to this one under the argument symmetries of the
    /// signature's operations, this term first.
    pub fn variants(&self, sig: &Signature) -> Vec<Term> {
        match self {
            Term::Var(_) => vec![self.clone()],
            Term::Op(k, ch) => {
                let mut combos: Vec<Vec<Term>> = vec![Vec::new()];
                for c in ch {
                    let vs = c.variants(sig);
                    combos = combos
                        .into_iter()
                        .flat_map(|prefix| {
                            vs.iter().map(move |v| {
                                let mut p = prefix.clone();
                                p.push(v.clone());
                                p
                            })
                        })
                        .collect();
                }
                let swaps = sig
                    .ops
                    .get(*k)
                    .map(|o| o.symmetries.as_slice())
                    .unwrap_or(&[]);
                let mut seen: HashSet<Vec<Term>> = HashSet::new();
                let mut out = Vec::new();
                let mut queue: Vec<Vec<Term>> = Vec::new();
                for c in combos {
                    if seen.insert(c.clone()) {
                        queue.push(c.clone());
                        out.push(c);
                    }
                }
                while let Some(c) = queue.pop() {
                    for &(i, j) in swaps {
                        let mut d = c.clone();
                        d.swap(i, j);
                        if seen.insert(d.clone()) {
                            queue.push(d.clone());
                            out.push(d);
                        }
                    }
                }
                out.into_iter().map(|c| Term::Op(*k, c)).collect()
            }
        }
    }

    /// Checks arities against the signature.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        match self {
            Term::Var(_) => Ok(()),
            Term::Op(k, ch) => {
                let op = sig.ops.get(*k).ok_or(Error::UnboundOperation(*k + 1))?;
                if op.arity != ch.len() {
                    return Err(Error::ArityMismatch {
                        op: *k + 1,
                        expected: op.arity,
                        found: ch.len(),
                    });
                }
                ch.iter().try_for_each(|c| c.check(sig))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{}", letter(*v)),
            Term::Op(k, ch) => {
                write!(f, "op{}(", k + 1)?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One operation of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSig {
    pub arity: usize,
    /// Pairs of argument positions (zero based) the operation is symmetric in.
    pub symmetries: Vec<(usize, usize)>,
    /// Binary products written by juxtaposition, `(ab)c`.
    pub juxtaposition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub ops: Vec<OpSig>,
}

impl Signature {
    /// One binary product written by juxtaposition.
    pub fn binary() -> Self {
        Signature {
            ops: vec![OpSig {
                arity: 2,
                symmetries: Vec::new(),
                juxtaposition: true,
            }],
        }
    }

    /// `count` operations of the same arity, no symmetries.
    pub fn uniform(count: usize, arity: usize) -> Self {
        Signature {
            ops: vec![
                OpSig {
                    arity,
                    symmetries: Vec::new(),
                    juxtaposition: false
                };
                count
            ],
        }
    }

    /// Adds a symmetry of operation `op` (zero based) in arguments `i`, `j`.
    pub fn with_symmetry(mut self, op: usize, i: usize, j: usize) -> Self {
        self.ops[op].symmetries.push((i, j));
        self
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    pub fn arity(&self, op: usize) -> usize {
        self.ops[op].arity
    }

    /// Writes a term, using juxtaposition for binary products.
    pub fn format_term(&self, t: &Term) -> String {
        let mut s = String::new();
        self.write_term(t, &mut s, true);
        s
    }

    fn write_term(&self, t: &Term, out: &mut String, top: bool) {
        match t {
            Term::Var(v) => out.push(letter(*v)),
            Term::Op(k, ch) if self.ops.get(*k).is_some_and(|o| o.juxtaposition) => {
                if !top {
                    out.push('(');
                }
                for c in ch {
                    self.write_term(c, out, false);
                }
                if !top {
                    out.push(')');
                }
            }
            Term::Op(k, ch) => {
                out.push_str(&format!("op{}(", k + 1));
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    self.write_term(c, out, true);
                }
                out.push(')');
            }
        }
    }

    /// Writes a polynomial as a signed sum of formatted terms.
    pub fn format_poly(&self, p: &TermPoly) -> String {
        crate::poly::format_signed_sum(p.iter(), |t| self.format_term(t))
    }

    /// All association types of the given degree, in generation order:
    /// operations in signature order, child sizes with larger leading
    /// children first, children varying fastest on the right. Types equal
    /// under an operation symmetry are listed once (first occurrence).
    pub fn association_types(&self, degree: usize) -> Result<Vec<Shape>> {
        let raw = self.raw_shapes(degree);
        if raw.is_empty() {
            return Err(Error::IncompatibleDegree { degree });
        }
        let mut seen: HashSet<Shape> = HashSet::new();
        let mut out = Vec::new();
        for s in raw {
            if seen.contains(&s) {
                continue;
            }
            for v in s.generic().variants(self) {
                seen.insert(v.shape());
            }
            out.push(s);
        }
        Ok(out)
    }

    fn raw_shapes(&self, degree: usize) -> Vec<Shape> {
        if degree == 1 {
            return vec![Shape::Leaf];
        }
        let mut out = Vec::new();
        for (k, op) in self.ops.iter().enumerate() {
            if op.arity < 2 || degree < op.arity {
                continue;
            }
            for sizes in compositions(degree, op.arity) {
                let parts: Vec<Vec<Shape>> = sizes.iter().map(|&s| self.raw_shapes(s)).collect();
                if parts.iter().any(Vec::is_empty) {
                    continue;
                }
                let mut combos: Vec<Vec<Shape>> = vec![Vec::new()];
                for p in &parts {
                    combos = combos
                        .into_iter()
                        .flat_map(|prefix| {
                            p.iter().map(move |s| {
                                let mut c = prefix.clone();
                                c.push(s.clone());
                                c
                            })
                        })
                        .collect();
                }
                out.extend(combos.into_iter().map(|c| Shape::Node(k, c)));
            }
        }
        out
    }
}

/// Compositions of `n` into `k` positive parts, lexicographically
/// decreasing.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (1..=n.saturating_sub(k - 1)).rev() {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    #[test]
    fn binary_type_counts_are_catalan() {
        let sig = Signature::binary();
        for d in 1..=7 {
            assert_eq!(sig.association_types(d).unwrap().len(), catalan(d - 1));
        }
    }

    #[test]
    fn binary_degree_five_order() {
        let sig = Signature::binary();
        let names: Vec<String> = sig
            .association_types(5)
            .unwrap()
            .iter()
            .map(|s| sig.format_term(&s.generic()))
            .collect();
        assert_eq!(
            names,
            [
                "(((ab)c)d)e",
                "((a(bc))d)e",
                "((ab)(cd))e",
                "(a((bc)d))e",
                "(a(b(cd)))e",
                "((ab)c)(de)",
                "(a(bc))(de)",
                "(ab)((cd)e)",
                "(ab)(c(de))",
                "a(((bc)d)e)",
                "a((b(cd))e)",
                "a((bc)(de))",
                "a(b((cd)e))",
                "a(b(c(de)))"
            ]
        );
    }

    #[test]
    fn incompatible_degree() {
        let sig = Signature::uniform(2, 3);
        assert!(sig.association_types(4).is_err());
        assert_eq!(sig.association_types(3).unwrap().len(), 2);
    }

    #[test]
    fn symmetric_second_operation_gives_ten_types() {
        let sig = Signature::uniform(2, 3).with_symmetry(1, 0, 2);
        assert_eq!(sig.association_types(5).unwrap().len(), 10);
        assert_eq!(
            Signature::uniform(2, 3).association_types(5).unwrap().len(),
            12
        );
    }

    #[test]
    fn substitution_grafts() {
        let sig = Signature::binary();
        let ab = Term::op(0, vec![Term::var(0), Term::var(1)]);
        let x = TermPoly::monomial(Term::op(0, vec![Term::var(0), Term::var(2)]));
        let y = TermPoly::monomial(Term::var(1));
        let out = ab.substitute(&[x, y]);
        assert_eq!(sig.format_poly(&out), "(ac)b");
    }

    #[test]
    fn variants_respect_declared_symmetry() {
        let sig = Signature::uniform(2, 3).with_symmetry(1, 0, 2);
        let t = Term::op(
            1,
            vec![
                Term::op(1, vec![Term::var(0), Term::var(1), Term::var(2)]),
                Term::var(3),
                Term::var(4),
            ],
        );
        assert_eq!(t.variants(&sig).len(), 4);
        assert_eq!(t.variants(&sig)[0], t);
    }
}
