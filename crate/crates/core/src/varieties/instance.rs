//! Finite-dimensional algebras given by structure constants over a prime
//! field, dialgebras built from them, and exact evaluation of identities on
//! random elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dialgebra::{DiOp, DiTree};
use crate::error::{Error, Result};
use crate::expansion::{DiOpTemplate, GroupAlgebraOp, NonassocOpTemplate};
use crate::field::{Field, PrimeField};
use crate::term::{Term, TermPoly};

pub type Vector = Vec<u32>;

/// A bilinear product on `F_p^dim`; `table[(i * dim + j) * dim + k]` is the
/// coefficient of `e_k` in `e_i e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    pub field: PrimeField,
    pub dim: usize,
    pub table: Vec<u32>,
}

impl Algebra {
    pub fn from_fn(field: PrimeField, dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product vector length");
                table.extend(v);
            }
        }
        Algebra { field, dim, table }
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vector {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![0u32; n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                let c = f.mul(xi, yj);
                let row = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, t) in out.iter_mut().zip(row) {
                    if *t != 0 {
                        *o = f.add(o, &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    /// `n x n` matrices with basis `E_ij` at index `i * n + j`.
    pub fn matrices(field: PrimeField, n: usize) -> Self {
        Self::from_fn(field, n * n, |x, y| {
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            let mut v = vec![0; n * n];
            if j == k {
                v[i * n + l] = 1;
            }
            v
        })
    }

    /// `A[θ]/(θ²)`: `e_i` at index `i`, `e_i θ` at index `dim + i`.
    pub fn adjoin_square_zero(&self) -> Self {
        let n = self.dim;
        Self::from_fn(self.field, 2 * n, |x, y| {
            let (i, s) = (x % n, x / n);
            let (j, t) = (y % n, y / n);
            let mut v = vec![0; 2 * n];
            if s + t < 2 {
                let prod = &self.table[(i * n + j) * n..(i * n + j + 1) * n];
                v[(s + t) * n..(s + t + 1) * n].copy_from_slice(prod);
            }
            v
        })
    }

    /// The field itself as a one-dimensional algebra.
    pub fn scalars(field: PrimeField) -> Self {
        Self::from_fn(field, 1, |_, _| vec![1])
    }

    pub fn is_associative(&self) -> bool {
        let e: Vec<Vector> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        (0..self.dim).into_par_iter().all(|i| {
            (0..self.dim).all(|j| {
                (0..self.dim).all(|k| {
                    self.mul(&self.mul(&e[i], &e[j]), &e[k])
                        == self.mul(&e[i], &self.mul(&e[j], &e[k]))
                })
            })
        })
    }

    pub fn random_element(&self, rng: &mut impl Rng) -> Vector {
        (0..self.dim)
            .map(|_| rng.gen_range(0..self.field.modulus()))
            .collect()
    }
}

/// A linear map given by its matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    pub dim: usize,
    /// Row-major: `rows[k][i]` is the coefficient of `e_k` in the image of `e_i`.
    pub rows: Vec<Vec<u32>>,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap {
            dim,
            rows: vec![vec![0; dim]; dim],
        }
    }

    /// `∂/∂θ` on `A[θ]/(θ²)` for `dim A = base`: `e_i θ -> e_i`, `e_i -> 0`.
    pub fn d_theta(base: usize) -> Self {
        let mut m = Self::zero(2 * base);
        for i in 0..base {
            m.rows[i][base + i] = 1;
        }
        m
    }

    pub fn apply(&self, field: &PrimeField, x: &[u32]) -> Vector {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(0, |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect()
    }
}

/// Two products `⊣` and `⊢` on one space.
#[derive(Clone, Debug)]
pub struct ConcreteDialgebra {
    pub left: Algebra,
    pub right: Algebra,
}

/// Which of the five dialgebra axioms fail on some basis triple.
pub const DIALGEBRA_AXIOMS: [&str; 5] = [
    "right bar",
    "left bar",
    "left associativity",
    "right associativity",
    "inner associativity",
];

impl ConcreteDialgebra {
    pub fn dim(&self) -> usize {
        self.left.dim
    }

    pub fn field(&self) -> PrimeField {
        self.left.field
    }

    pub fn op(&self, op: DiOp, x: &[u32], y: &[u32]) -> Vector {
        match op {
            DiOp::Left => self.left.mul(x, y),
            DiOp::Right => self.right.mul(x, y),
        }
    }

    /// Names of the axioms violated on some triple of basis vectors.
    pub fn failed_axioms(&self) -> Vec<&'static str> {
        let n = self.dim();
        let e: Vec<Vector> = (0..n).map(|i| self.left.basis_vector(i)).collect();
        let (l, r) = (&self.left, &self.right);
        let checks: [&(dyn Fn(&[u32], &[u32], &[u32]) -> bool + Sync); 5] = [
            &|a, b, c| r.mul(&l.mul(a, b), c) == r.mul(&r.mul(a, b), c),
            &|a, b, c| l.mul(a, &l.mul(b, c)) == l.mul(a, &r.mul(b, c)),
            &|a, b, c| l.mul(&l.mul(a, b), c) == l.mul(a, &l.mul(b, c)),
            &|a, b, c| r.mul(&r.mul(a, b), c) == r.mul(a, &r.mul(b, c)),
            &|a, b, c| l.mul(&r.mul(a, b), c) == r.mul(a, &l.mul(b, c)),
        ];
        DIALGEBRA_AXIOMS
            .iter()
            .zip(checks)
            .filter(|(_, check)| {
                !(0..n)
                    .into_par_iter()
                    .all(|i| (0..n).all(|j| (0..n).all(|k| check(&e[i], &e[j], &e[k]))))
            })
            .map(|(name, _)| *name)
            .collect()
    }

    /// Evaluates a dialgebra monomial through its canonical tree.
    pub fn eval_tree(&self, t: &DiTree, args: &[Vector]) -> Vector {
        match t {
            DiTree::Leaf(v) => args[*v as usize].clone(),
            DiTree::Node(op, a, b) => {
                self.op(*op, &self.eval_tree(a, args), &self.eval_tree(b, args))
            }
        }
    }

    /// Value of a dialgebra operation on the given arguments.
    pub fn eval_template(&self, template: &DiOpTemplate, args: &[Vector]) -> Vector {
        let f = self.field();
        let mut out = vec![0; self.dim()];
        for m_c in template.as_poly().iter() {
            let (m, c) = m_c;
            let v = self.eval_tree(&DiTree::from_monomial(m), args);
            let c = f.from_coeff(c).expect("template coefficient");
            add_scaled(&f, &mut out, &v, c);
        }
        out
    }

    /// The product `ab = a ⊣ b + b ⊢ a`.
    pub fn jordan_product(&self) -> Algebra {
        let f = self.field();
        Algebra::from_fn(f, self.dim(), |i, j| {
            let a = self.left.basis_vector(i);
            let b = self.left.basis_vector(j);
            let mut v = self.left.mul(&a, &b);
            add_scaled(&f, &mut v, &self.right.mul(&b, &a), 1);
            v
        })
    }
}

fn add_scaled(f: &PrimeField, out: &mut [u32], v: &[u32], c: u32) {
    for (o, x) in out.iter_mut().zip(v) {
        *o = f.add(o, &f.mul(&c, x));
    }
}

/// Whether `d` is a derivation of the product on basis pairs.
pub fn is_derivation(base: &Algebra, d: &LinearMap) -> bool {
    let f = &base.field;
    (0..base.dim).all(|i| {
        (0..base.dim).all(|j| {
            let (x, y) = (base.basis_vector(i), base.basis_vector(j));
            let mut rhs = base.mul(&d.apply(f, &x), &y);
            add_scaled(f, &mut rhs, &base.mul(&x, &d.apply(f, &y)), 1);
            d.apply(f, &base.mul(&x, &y)) == rhs
        })
    })
}

/// The dialgebra `x ⊣ y = x d(y)`, `x ⊢ y = d(x) y` on an associative
/// algebra. Requires `d² = 0` and `d(x d(y)) = d(x) d(y) = d(d(x) y)`
/// on basis pairs, which is what the five axioms need; a derivation with
/// square zero satisfies both.
pub fn make_differential_dialgebra(base: &Algebra, d: &LinearMap) -> Result<ConcreteDialgebra> {
    if d.dim != base.dim {
        return Err(Error::DimensionMismatch {
            expected: base.dim,
            found: d.dim,
        });
    }
    if !base.is_associative() {
        return Err(Error::Inconsistent(
            "base algebra is not associative".into(),
        ));
    }
    let f = base.field;
    let dx: Vec<Vector> = (0..base.dim)
        .map(|i| d.apply(&f, &base.basis_vector(i)))
        .collect();
    if dx.iter().any(|v| d.apply(&f, v).iter().any(|x| *x != 0)) {
        return Err(Error::Inconsistent("d does not square to zero".into()));
    }
    for i in 0..base.dim {
        for j in 0..base.dim {
            let (x, y) = (base.basis_vector(i), base.basis_vector(j));
            let dd = base.mul(&dx[i], &dx[j]);
            if d.apply(&f, &base.mul(&x, &dx[j])) != dd || d.apply(&f, &base.mul(&dx[i], &y)) != dd
            {
                return Err(Error::Inconsistent(
                    "d fails the Leibniz rule needed for the dialgebra axioms".into(),
                ));
            }
        }
    }
    let left = Algebra::from_fn(f, base.dim, |i, j| base.mul(&base.basis_vector(i), &dx[j]));
    let right = Algebra::from_fn(f, base.dim, |i, j| base.mul(&dx[i], &base.basis_vector(j)));
    let di = ConcreteDialgebra { left, right };
    let failed = di.failed_axioms();
    if !failed.is_empty() {
        return Err(Error::Inconsistent(format!(
            "dialgebra axioms fail: {}",
            failed.join(", ")
        )));
    }
    Ok(di)
}

/// Concrete operations on `F_p^dim`.
pub trait ConcreteOps: Sync {
    fn field(&self) -> PrimeField;
    fn dim(&self) -> usize;
    fn apply(&self, op: usize, args: &[Vector]) -> Vector;

    fn eval_term(&self, t: &Term, vars: &[Vector]) -> Vector {
        match t {
            Term::Var(v) => vars[*v as usize].clone(),
            Term::Op(k, ch) => {
                let args: Vec<Vector> = ch.iter().map(|c| self.eval_term(c, vars)).collect();
                self.apply(*k, &args)
            }
        }
    }

    fn eval(&self, p: &TermPoly, vars: &[Vector]) -> Vector {
        let f = self.field();
        let mut out = vec![0; self.dim()];
        for (t, c) in p.iter() {
            let c = f.from_coeff(c).expect("coefficient invertible mod p");
            add_scaled(&f, &mut out, &self.eval_term(t, vars), c);
        }
        out
    }
}

/// Dialgebra operations on a concrete dialgebra.
pub struct DialgebraOps<'a> {
    pub algebra: &'a ConcreteDialgebra,
    pub ops: Vec<DiOpTemplate>,
}

impl ConcreteOps for DialgebraOps<'_> {
    fn field(&self) -> PrimeField {
        self.algebra.field()
    }
    fn dim(&self) -> usize {
        self.algebra.dim()
    }
    fn apply(&self, op: usize, args: &[Vector]) -> Vector {
        self.algebra.eval_template(&self.ops[op], args)
    }
}

/// Operations in the group algebra evaluated in an associative algebra.
pub struct AssociativeOps<'a> {
    pub algebra: &'a Algebra,
    pub ops: Vec<GroupAlgebraOp>,
}

impl ConcreteOps for AssociativeOps<'_> {
    fn field(&self) -> PrimeField {
        self.algebra.field
    }
    fn dim(&self) -> usize {
        self.algebra.dim
    }
    fn apply(&self, op: usize, args: &[Vector]) -> Vector {
        let f = self.algebra.field;
        let mut out = vec![0; self.algebra.dim];
        for (sigma, c) in &self.ops[op].terms {
            let mut v = args[sigma.apply(0)].clone();
            for s in 1..sigma.degree() {
                v = self.algebra.mul(&v, &args[sigma.apply(s)]);
            }
            add_scaled(
                &f,
                &mut out,
                &v,
                f.from_coeff(c).expect("coefficient invertible mod p"),
            );
        }
        out
    }
}

/// Operations written in one binary product, evaluated in a concrete
/// algebra.
pub struct ProductOps<'a> {
    pub algebra: &'a Algebra,
    pub ops: Vec<NonassocOpTemplate>,
}

impl ProductOps<'_> {
    fn eval_product(&self, t: &Term, args: &[Vector]) -> Vector {
        match t {
            Term::Var(v) => args[*v as usize].clone(),
            Term::Op(_, ch) => self.algebra.mul(
                &self.eval_product(&ch[0], args),
                &self.eval_product(&ch[1], args),
            ),
        }
    }
}

impl ConcreteOps for ProductOps<'_> {
    fn field(&self) -> PrimeField {
        self.algebra.field
    }
    fn dim(&self) -> usize {
        self.algebra.dim
    }
    fn apply(&self, op: usize, args: &[Vector]) -> Vector {
        let f = self.algebra.field;
        let mut out = vec![0; self.algebra.dim];
        for (t, c) in self.ops[op].poly.iter() {
            add_scaled(
                &f,
                &mut out,
                &self.eval_product(t, args),
                f.from_coeff(c).expect("coefficient invertible mod p"),
            );
        }
        out
    }
}

/// Operations given directly as functions.
pub struct FnOps<G: Fn(usize, &[Vector]) -> Vector + Sync> {
    pub field: PrimeField,
    pub dim: usize,
    pub f: G,
}

impl<G: Fn(usize, &[Vector]) -> Vector + Sync> ConcreteOps for FnOps<G> {
    fn field(&self) -> PrimeField {
        self.field
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn apply(&self, op: usize, args: &[Vector]) -> Vector {
        (self.f)(op, args)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceReport {
    pub seed: u64,
    pub trials: usize,
    /// Per identity: name and number of trials with a nonzero value.
    pub violations: Vec<(String, usize)>,
}

impl InstanceReport {
    pub fn total_violations(&self) -> usize {
        self.violations.iter().map(|v| v.1).sum()
    }
}

/// Evaluates each identity on `trials` tuples of random elements drawn
/// from a ChaCha generator seeded with `seed`.
pub fn verify_on_instance<O: ConcreteOps>(
    ops: &O,
    identities: &[(String, TermPoly)],
    trials: usize,
    seed: u64,
) -> Result<InstanceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arity = identities
        .iter()
        .map(|(_, p)| crate::parse::check_multilinear(p, "identity"))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    let p = ops.field().modulus();
    let tuples: Vec<Vec<Vector>> = (0..trials)
        .map(|_| {
            (0..arity)
                .map(|_| (0..ops.dim()).map(|_| rng.gen_range(0..p)).collect())
                .collect()
        })
        .collect();
    let violations = identities
        .iter()
        .map(|(name, id)| {
            let bad = tuples
                .par_iter()
                .filter(|vars| ops.eval(id, vars).iter().any(|x| *x != 0))
                .count();
            (name.clone(), bad)
        })
        .collect();
    Ok(InstanceReport {
        seed,
        trials,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn matrices_are_associative() {
        assert!(Algebra::matrices(f(), 2).is_associative());
        assert!(Algebra::matrices(f(), 2)
            .adjoin_square_zero()
            .is_associative());
    }

    #[test]
    fn dual_numbers() {
        let base = Algebra::scalars(f()).adjoin_square_zero();
        let d = LinearMap::d_theta(1);
        assert!(!is_derivation(&base, &d));
        let di = make_differential_dialgebra(&base, &d).unwrap();
        assert_eq!(di.dim(), 2);
    }

    #[test]
    fn zero_map_gives_trivial_dialgebra() {
        let base = Algebra::matrices(f(), 2);
        let di = make_differential_dialgebra(&base, &LinearMap::zero(4)).unwrap();
        assert!(di.left.table.iter().chain(&di.right.table).all(|x| *x == 0));
    }

    #[test]
    fn rejects_bad_differentials() {
        let base = Algebra::matrices(f(), 2).adjoin_square_zero();
        let mut d = LinearMap::d_theta(4);
        d.rows[4][0] = 1;
        assert!(make_differential_dialgebra(&base, &d).is_err());
        let base = Algebra::scalars(f()).adjoin_square_zero();
        let mut id = LinearMap::zero(2);
        id.rows[0][0] = 1;
        id.rows[1][1] = 1;
        assert!(make_differential_dialgebra(&base, &id).is_err());
    }
}
