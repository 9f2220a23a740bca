//! The computations behind the published results, each with its expected
//! numbers embedded as checks.

use std::collections::BTreeMap;

use crate::basis::TreeBasis;
use crate::engine::{
    consequences, consequences_to_degree, extract_generators, find_identities, identities_modulo,
    permuted_vectors, sort_by_support, superfluity_prune, ModuleAction,
};
use crate::error::{Error, Result};
use crate::expansion::{
    DiExpander, DiOpTemplate, Expander, GroupAlgebraOp, NonassocExpander, NonassocOpTemplate,
};
use crate::field::{Coeff, Field, FieldTag, PrimeField, Rationals};
use crate::kp::{kp_part1, kp_part2, kp_reduce_opposite};
use crate::linalg::{rcf, support_size, DenseMatrix, Subspace};
use crate::parse::{check_multilinear, parse_identity, parse_poly};
use crate::perm::Permutation;
use crate::report::Report;
use crate::term::{Shape, Signature, TermPoly};
use crate::varieties::builtin::*;
use crate::varieties::instance::ConcreteOps;
use crate::varieties::instance::{
    make_differential_dialgebra, verify_on_instance, Algebra, AssociativeOps, DialgebraOps, FnOps,
    LinearMap, ProductOps, Vector,
};
use crate::varieties::{verify_modulo, verify_on_free};

/// The degree 5 association types for two trilinear operations, the second
/// symmetric in its outer arguments.
pub const TRIPLE_TYPES_DEG5: [&str; 10] = [
    "((a,b,c)_1,d,e)_1",
    "(a,(b,c,d)_1,e)_1",
    "(a,b,(c,d,e)_1)_1",
    "((a,b,c)_2,d,e)_2",
    "(a,(b,c,d)_2,e)_2",
    "((a,b,c)_2,d,e)_1",
    "(a,(b,c,d)_2,e)_1",
    "(a,b,(c,d,e)_2)_1",
    "((a,b,c)_1,d,e)_2",
    "(a,(b,c,d)_1,e)_2",
];

/// Column order of the types in the Jordan dialgebra computation: by outer
/// operation, then inner operation, then position.
pub const JD_TYPE_ORDER: [usize; 10] = [0, 1, 2, 5, 6, 7, 8, 9, 3, 4];

pub const EXPERIMENTS: [&str; 11] = [
    "diproduct1-deg3",
    "diproduct2-deg3",
    "diproduct1-deg5",
    "diproduct2-deg5",
    "diproducts-deg5-both",
    "theorem-equivalence",
    "jordan-dialgebra-deg3",
    "jordan-dialgebra-deg5",
    "variety-verification",
    "special-reduction",
    "instance-suite",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub field: FieldTag,
    pub seed: u64,
    pub trials: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            field: FieldTag::Prime(PrimeField::DEFAULT_MODULUS),
            seed: 1,
            trials: 200,
        }
    }
}

/// Highest degree an experiment works in.
pub fn experiment_degree(name: &str) -> Result<usize> {
    Ok(match name {
        "diproduct1-deg3" | "diproduct2-deg3" | "jordan-dialgebra-deg3" | "special-reduction" => 3,
        "diproduct1-deg5"
        | "diproduct2-deg5"
        | "diproducts-deg5-both"
        | "theorem-equivalence"
        | "jordan-dialgebra-deg5"
        | "variety-verification"
        | "instance-suite" => 5,
        _ => return Err(Error::Unknown(name.to_string())),
    })
}

pub fn run_experiment(name: &str, cfg: &ExperimentConfig) -> Result<Report> {
    let degree = experiment_degree(name)?;
    match cfg.field {
        FieldTag::Rational => run_in(&Rationals, name, cfg),
        FieldTag::Prime(p) => run_in(&PrimeField::for_degree(p, degree)?, name, cfg),
    }
}

fn run_in<F: Field>(f: &F, name: &str, cfg: &ExperimentConfig) -> Result<Report> {
    match name {
        "diproduct1-deg3" => diproduct1_deg3(f),
        "diproduct2-deg3" => diproduct2_deg3(f),
        "diproduct1-deg5" => diproduct1_deg5(f),
        "diproduct2-deg5" => diproduct2_deg5(f),
        "diproducts-deg5-both" => diproducts_deg5(f),
        "theorem-equivalence" => theorem_equivalence(f),
        "jordan-dialgebra-deg3" => jordan_dialgebra_deg3(f),
        "jordan-dialgebra-deg5" => jordan_dialgebra_deg5(f),
        "variety-verification" => variety_verification(f),
        "special-reduction" => special_reduction(f),
        "instance-suite" => match f.tag() {
            FieldTag::Prime(p) => instance_suite(PrimeField::new(p)?, cfg),
            FieldTag::Rational => Err(Error::FieldConstraint(
                "concrete instances need a prime field".into(),
            )),
        },
        _ => Err(Error::Unknown(name.to_string())),
    }
}

fn shapes(sig: &Signature, srcs: &[&str]) -> Result<Vec<Shape>> {
    srcs.iter()
        .map(|s| {
            let p = parse_poly(s, sig)?;
            let t = p
                .monomials()
                .next()
                .ok_or_else(|| Error::Malformed(s.to_string()))?;
            Ok(t.shape())
        })
        .collect()
}

/// The 360 monomials of the first diproduct in degree 5.
pub fn diproduct1_basis() -> Result<TreeBasis> {
    let sig = Signature::uniform(1, 3);
    TreeBasis::new(&sig, shapes(&sig, &TRIPLE_TYPES_DEG5[..3])?, &[])
}

/// The 90 monomials of the second diproduct in degree 5.
pub fn diproduct2_basis() -> Result<TreeBasis> {
    let sig = symmetric_triple_signature();
    TreeBasis::new(&sig, shapes(&sig, &TRIPLE_TYPES_DEG5[3..5])?, &[])
}

/// The 690 monomials in both diproducts, with the symmetries of the first
/// diproduct's degree 5 identities imposed on types 2 and 3.
pub fn diproducts_basis() -> Result<TreeBasis> {
    let sig = symmetric_triple_signature();
    TreeBasis::new(
        &sig,
        shapes(&sig, &TRIPLE_TYPES_DEG5)?,
        &[(1, vec![(1, 3)]), (2, vec![(2, 4)])],
    )
}

/// The 810 monomials in two trilinear operations, the second symmetric, in
/// the column order of the Jordan dialgebra computation.
pub fn jordan_triple_basis() -> Result<TreeBasis> {
    let sig = symmetric_triple_signature();
    let srcs: Vec<&str> = JD_TYPE_ORDER
        .iter()
        .map(|&i| TRIPLE_TYPES_DEG5[i])
        .collect();
    TreeBasis::new(&sig, shapes(&sig, &srcs)?, &[])
}

fn diproducts() -> Result<DiExpander> {
    Ok(DiExpander {
        ops: vec![
            DiOpTemplate::parse(DIPRODUCT1)?,
            DiOpTemplate::parse(DIPRODUCT2)?,
        ],
    })
}

fn jd_triples() -> Result<Vec<NonassocOpTemplate>> {
    Ok(vec![
        NonassocOpTemplate::parse(JD_TRIPLE1)?,
        NonassocOpTemplate::parse(JD_TRIPLE2)?,
    ])
}

fn coeffs<F: Field>(f: &F, v: &[F::Elem]) -> Vec<Coeff> {
    v.iter().map(|x| f.to_coeff(x)).collect()
}

fn format_vector<F: Field>(f: &F, v: &[F::Elem]) -> String {
    coeffs(f, v)
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Rows of a printed 0/1 matrix, dots for zeros.
fn printed_rows(rows: &[&str]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            r.split_whitespace()
                .map(|t| if t == "1" { 1 } else { 0 })
                .collect()
        })
        .collect()
}

fn census<F: Field>(f: &F, vs: &[Vec<F::Elem>]) -> BTreeMap<usize, usize> {
    let mut c = BTreeMap::new();
    for v in vs {
        *c.entry(support_size(f, v)).or_insert(0) += 1;
    }
    c
}

fn span_of<F: Field>(
    f: &F,
    basis: &TreeBasis,
    action: &ModuleAction,
    ids: &[TermPoly],
) -> Result<Subspace<F>> {
    let vs = ids
        .iter()
        .map(|p| basis.field_vector(f, p))
        .collect::<Result<Vec<_>>>()?;
    action.module_span(f, basis.len(), &vs)
}

const DIPRODUCT1_DEG3_PRINTED: [&str; 6] = [
    "1 . . . . . . . . . . . . . . . . 1",
    ". 1 . . . . . . . . . . . . . 1 . .",
    ". . 1 . . . . . . . . . . . . . 1 .",
    ". . . 1 . . . . . . . . . 1 . . . .",
    ". . . . 1 . . . . . . . . . 1 . . .",
    ". . . . . 1 . . . . . . 1 . . . . .",
];

const DIPRODUCT2_DEG3_PRINTED: [&str; 6] = [
    ". . . . . . 1 . . . . 1 . . . . . .",
    ". . . . . . . 1 . 1 . . . . . . . .",
    ". . . . . . . . 1 . 1 . . . . . . .",
    ". . . . . . . 1 . 1 . . . . . . . .",
    ". . . . . . . . 1 . 1 . . . . . . .",
    ". . . . . . 1 . . . . 1 . . . . . .",
];

const DI_MONOMIALS_DEG3: [&str; 18] = [
    "^a b c", "^a c b", "^b a c", "^b c a", "^c a b", "^c b a", "a ^b c", "a ^c b", "b ^a c",
    "b ^c a", "c ^a b", "c ^b a", "a b ^c", "a c ^b", "b a ^c", "b c ^a", "c a ^b", "c b ^a",
];

fn single_op_deg3<F: Field>(
    f: &F,
    name: &str,
    template: &str,
    printed: &[&str],
) -> Result<(Report, Vec<Vec<F::Elem>>)> {
    let basis = TreeBasis::full(&Signature::uniform(1, 3), 3)?;
    let ids = find_identities(
        f,
        &basis,
        &DiExpander {
            ops: vec![DiOpTemplate::parse(template)?],
        },
    )?;
    let m = &ids.matrix;
    let mut r = Report::new(name, 3, f.tag());
    r.matrix_shape = Some([m.matrix.rows(), m.matrix.cols()]);
    r.rank = Some(ids.rank);
    r.nullity = Some(ids.nullity());
    r.check_list(
        "matrix shape",
        &[18, 6],
        &[m.matrix.rows(), m.matrix.cols()],
    );
    r.check_list(
        "row order",
        &DI_MONOMIALS_DEG3.map(String::from),
        &m.row_labels,
    );
    let expected = DenseMatrix::from_i64_rows(f.clone(), &printed_rows(printed))?;
    r.check_true(
        "transpose equals the printed matrix",
        m.matrix.transpose() == expected,
    );
    r.table("expansion matrix", m.to_tsv());
    r.generators = ids
        .identities
        .iter()
        .map(|v| basis.format_poly(&basis.poly_of(f, v)))
        .collect();
    Ok((r, ids.identities))
}

fn diproduct1_deg3<F: Field>(f: &F) -> Result<Report> {
    let (mut r, null) = single_op_deg3(f, "diproduct1-deg3", DIPRODUCT1, &DIPRODUCT1_DEG3_PRINTED)?;
    r.check("rank", 6, r.rank.unwrap_or(0));
    r.check("nullity", 0, null.len());
    Ok(r)
}

fn diproduct2_deg3<F: Field>(f: &F) -> Result<Report> {
    let (mut r, null) = single_op_deg3(f, "diproduct2-deg3", DIPRODUCT2, &DIPRODUCT2_DEG3_PRINTED)?;
    r.check("rank", 3, r.rank.unwrap_or(0));
    let printed: Vec<Vec<Coeff>> = [
        [0, -1, 0, 1, 0, 0],
        [0, 0, -1, 0, 1, 0],
        [-1, 0, 0, 0, 0, 1],
    ]
    .iter()
    .map(|v| v.iter().map(|&x| Coeff::from_integer(x)).collect())
    .collect();
    let mut got: Vec<Vec<Coeff>> = null.iter().map(|v| coeffs(f, v)).collect();
    let mut want = printed.clone();
    got.sort();
    want.sort();
    r.check_true("nullspace basis equals the printed vectors", got == want);
    r.detail(
        "nullspace",
        null.iter().map(|v| format_vector(f, v)).collect::<Vec<_>>(),
    );
    Ok(r)
}

fn diproduct1_deg5<F: Field>(f: &F) -> Result<Report> {
    let basis = diproduct1_basis()?;
    let ids = find_identities(
        f,
        &basis,
        &DiExpander {
            ops: vec![DiOpTemplate::parse(DIPRODUCT1)?],
        },
    )?;
    let mut r = Report::new("diproduct1-deg5", 5, f.tag());
    let shape = ids.matrix.matrix.shape();
    r.matrix_shape = Some([shape.0, shape.1]);
    r.rank = Some(ids.rank);
    r.nullity = Some(ids.nullity());
    r.check_list("matrix shape", &[600, 360], &[shape.0, shape.1]);
    r.check("rank", 150, ids.rank);
    r.check("nullity", 210, ids.nullity());
    let unit = ids.identities.iter().flatten().all(|x| {
        let c = f.to_coeff(x);
        c == Coeff::from_integer(0) || c == Coeff::from_integer(1) || c == Coeff::from_integer(-1)
    });
    r.check_true("nullspace components are 0 or ±1", unit);
    let c = census(f, &ids.identities);
    r.check_list(
        "support census (2, 4, 6)",
        &[30, 120, 60],
        &[2, 4, 6].map(|k| c.get(&k).copied().unwrap_or(0)),
    );
    r.detail("support_census", &c);

    let action = ModuleAction::new(&basis)?;
    let space = Subspace::from_rows(f.clone(), basis.len(), ids.identities.clone())?;
    let g = extract_generators(f, &action, &space, &[], &ids.identities)?;
    r.rank_trajectory = g.rank_trajectory.clone();
    r.accepted_indices = g.accepted.iter().map(|i| i + 1).collect();
    r.generators = g
        .generators
        .iter()
        .map(|v| basis.format_poly(&basis.poly_of(f, v)))
        .collect();
    r.check("generators", 3, g.generators.len());
    r.check("generated dimension", 210, g.final_dim);
    let printed = builtin("diproduct1-deg5")?;
    let span = span_of(f, &basis, &action, &printed.polys())?;
    let found = action.module_span(f, basis.len(), &g.generators)?;
    r.check_true(
        "same module as the printed generators",
        span.equals(&found)?,
    );
    let prune = superfluity_prune(f, &action, 210, &[], &g.generators)?;
    r.check_true("generators are independent", prune.independent);
    Ok(r)
}

fn diproduct2_deg5<F: Field>(f: &F) -> Result<Report> {
    let basis = diproduct2_basis()?;
    let ids = find_identities(f, &basis, &diproducts()?)?;
    let mut r = Report::new("diproduct2-deg5", 5, f.tag());
    let shape = ids.matrix.matrix.shape();
    r.matrix_shape = Some([shape.0, shape.1]);
    r.rank = Some(ids.rank);
    r.nullity = Some(ids.nullity());
    r.check_list("monomials per type", &[60, 30], &basis.type_counts());
    r.check_list("matrix shape", &[600, 90], &[shape.0, shape.1]);
    r.check("rank", 90, ids.rank);
    r.check("nullity", 0, ids.nullity());
    Ok(r)
}

fn diproducts_deg5<F: Field>(f: &F) -> Result<Report> {
    let basis = diproducts_basis()?;
    let ids = find_identities(f, &basis, &diproducts()?)?;
    let mut r = Report::new("diproducts-deg5-both", 5, f.tag());
    let shape = ids.matrix.matrix.shape();
    r.matrix_shape = Some([shape.0, shape.1]);
    r.rank = Some(ids.rank);
    r.nullity = Some(ids.nullity());
    r.check_list(
        "monomials per type",
        &[120, 60, 60, 60, 30, 60, 60, 60, 120, 60],
        &basis.type_counts(),
    );
    r.check_list("matrix shape", &[600, 690], &[shape.0, shape.1]);
    r.check("rank", 250, ids.rank);
    r.check("nullity", 440, ids.nullity());

    let action = ModuleAction::new(&basis)?;
    let space = Subspace::from_rows(f.clone(), basis.len(), ids.identities.clone())?;
    let seed = basis.field_vector(f, &parse_identity(DIPRODUCTS_SEED, &triple_signature())?)?;
    let g = extract_generators(
        f,
        &action,
        &space,
        std::slice::from_ref(&seed),
        &ids.identities,
    )?;
    r.rank_trajectory = g.rank_trajectory.clone();
    r.accepted_indices = g.accepted.iter().map(|i| i + 1).collect();
    r.generators = g
        .generators
        .iter()
        .map(|v| basis.format_poly(&basis.poly_of(f, v)))
        .collect();
    r.check("seed span", 90, g.seed_dim);
    r.check("further generators", 6, g.generators.len());
    r.check("generated dimension", 440, g.final_dim);
    let prune = superfluity_prune(f, &action, 440, std::slice::from_ref(&seed), &g.generators)?;
    r.check_true(
        "no proper subset of the generators suffices",
        prune.independent,
    );
    let printed = builtin("diproducts-deg5")?;
    let span = span_of(f, &basis, &action, &printed.polys())?;
    r.check("printed generators span", 440, span.dim());
    Ok(r)
}

/// The KP identities of the Jordan triple system axioms, computed: Part 1
/// of both axioms and Part 2, with the third operation eliminated through
/// `{a,b,c}_3 = {c,b,a}_1`.
pub fn computed_kp_jtd() -> Result<Vec<TermPoly>> {
    let one = Signature::uniform(1, 3);
    let mut all = kp_part1(&parse_identity(JTS_SYMMETRY, &one)?, 3)?;
    all.extend(kp_part1(&parse_identity(JTS_DERIVATION, &one)?, 3)?);
    all.extend(kp_part2(3));
    kp_reduce_opposite(&all, 2, &Permutation::from_images(vec![2, 1, 0])?)
}

fn theorem_equivalence<F: Field>(f: &F) -> Result<Report> {
    let mut r = Report::new("theorem-equivalence", 5, f.tag());
    let sets: Vec<(&str, Vec<TermPoly>)> = vec![
        ("jtd", builtin("jtd")?.polys()),
        ("jtd-kp", builtin("jtd-kp")?.polys()),
        ("jtd-bso", builtin("jtd-bso")?.polys()),
        ("kp-computed", computed_kp_jtd()?),
    ];
    let bases = [
        TreeBasis::full(&triple_signature(), 3)?,
        jordan_triple_basis()?,
    ];
    let expected = [3, 560];
    for (basis, want) in bases.iter().zip(expected) {
        let d = basis.degree();
        let action = ModuleAction::new(basis)?;
        let null = find_identities(f, basis, &diproducts()?)?;
        let reference = Subspace::from_rows(f.clone(), basis.len(), null.identities)?;
        r.check(
            &format!("degree {d} diproduct identities"),
            want,
            reference.dim(),
        );
        for (name, ids) in &sets {
            let mut of_degree = Vec::new();
            for p in ids {
                if check_multilinear(p, name)? == d {
                    of_degree.push(p.clone());
                }
            }
            let span = span_of(f, basis, &action, &of_degree)?;
            r.detail(&format!("{name}_deg{d}"), span.dim());
            r.check_true(
                &format!("degree {d}: {name} spans the diproduct identities"),
                span.equals(&reference)?,
            );
        }
    }
    Ok(r)
}

/// Reads a matrix in the `. + - *` notation.
pub fn parse_sign_matrix(text: &str) -> Result<Vec<Vec<Coeff>>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| match t {
                    "." => Ok(Coeff::from_integer(0)),
                    "+" => Ok(Coeff::from_integer(1)),
                    "-" => Ok(Coeff::from_integer(-1)),
                    "*" => Ok(Coeff::new(1, 2)),
                    _ => Err(Error::Malformed(format!("matrix entry {t}"))),
                })
                .collect()
        })
        .collect()
}

/// Writes a matrix in the `. + - *` notation, other entries as fractions.
pub fn format_sign_matrix<F: Field>(m: &DenseMatrix<F>) -> String {
    let f = m.field();
    let half = f.inv(&f.from_i64(2));
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row(i)
            .iter()
            .map(|x| {
                if f.is_zero(x) {
                    ".".into()
                } else if *x == f.one() {
                    "+".into()
                } else if *x == f.neg(&f.one()) {
                    "-".into()
                } else if Some(x) == half.as_ref() {
                    "*".into()
                } else {
                    f.format(x)
                }
            })
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub const JD_DEG3_MATRIX: &str = include_str!("../tests/fixtures/jd_deg3_matrix.txt");
pub const JD_DEG3_RCF: &str = include_str!("../tests/fixtures/jd_deg3_rcf.txt");

/// The 18 × 24 matrix: permutations of right commutativity over zeros,
/// then the expansion of each trilinear monomial beside the identity.
pub fn jordan_dialgebra_deg3_matrix<F: Field>(
    f: &F,
) -> Result<(TreeBasis, TreeBasis, DenseMatrix<F>)> {
    let left = TreeBasis::full(&Signature::binary(), 3)?;
    let right = TreeBasis::full(&triple_signature(), 3)?;
    let action = ModuleAction::new(&left)?;
    let (nl, nr) = (left.len(), right.len());
    let mut rows = Vec::new();
    for v in permuted_vectors(f, &left, &action, &[binary_identity(RIGHT_COMMUTATIVITY)])? {
        let mut row = v;
        row.resize(nl + nr, f.zero());
        rows.push(row);
    }
    let e = NonassocExpander::new(jd_triples()?, 3)?;
    for j in 0..nr {
        let mut row = e.expansion_vector(f, 3, &TermPoly::monomial(right.monomial(j)))?;
        row.resize(nl + nr, f.zero());
        row[nl + j] = f.one();
        rows.push(row);
    }
    Ok((
        left,
        right,
        DenseMatrix::from_rows(f.clone(), nl + nr, rows)?,
    ))
}

fn jordan_dialgebra_deg3<F: Field>(f: &F) -> Result<Report> {
    let (left, right, m) = jordan_dialgebra_deg3_matrix(f)?;
    let mut r = Report::new("jordan-dialgebra-deg3", 3, f.tag());
    r.matrix_shape = Some([m.rows(), m.cols()]);
    let labels: Vec<String> = (0..left.len()).map(|i| left.label(i)).collect();
    let printed = [
        "(ab)c", "(ac)b", "(ba)c", "(bc)a", "(ca)b", "(cb)a", "a(bc)", "a(cb)", "b(ac)", "b(ca)",
        "c(ab)", "c(ba)",
    ];
    r.check_list("left columns", &printed.map(String::from), &labels);
    let matrix = DenseMatrix::from_coeff_rows(f.clone(), m.cols(), &parse_sign_matrix(JD_DEG3_MATRIX)?)?;
    r.check_true("matrix equals the printed matrix", m == matrix);
    let red = rcf(&m);
    r.rank = Some(red.rank);
    r.check("rank", 15, red.rank);
    let nonzero = DenseMatrix::from_rows(
        f.clone(),
        m.cols(),
        red.rcf.row_vecs().into_iter().take(red.rank).collect(),
    )?;
    let rcf = DenseMatrix::from_coeff_rows(f.clone(), m.cols(), &parse_sign_matrix(JD_DEG3_RCF)?)?;
    r.check_true(
        "row canonical form equals the printed form",
        nonzero == rcf,
    );
    let nl = left.len();
    let right_rows: Vec<Vec<F::Elem>> = (0..red.rank)
        .filter(|&i| red.rcf.row(i)[..nl].iter().all(|x| f.is_zero(x)))
        .map(|i| red.rcf.row(i)[nl..].to_vec())
        .collect();
    r.check("rows leading in the right part", 3, right_rows.len());
    let action = ModuleAction::new(&right)?;
    let sym = span_of(
        f,
        &right,
        &action,
        &[parse_identity(
            "(a,b,c)_2 - (c,b,a)_2",
            &triple_signature(),
        )?],
    )?;
    let found = Subspace::from_rows(f.clone(), right.len(), right_rows.clone())?;
    r.check_true(
        "right rows span the permutations of the symmetry",
        found.equals(&sym)?,
    );
    r.generators = right_rows
        .iter()
        .map(|v| right.format_poly(&right.poly_of(f, v)))
        .collect();
    let e = NonassocExpander::new(jd_triples()?, 3)?;
    let cons = permuted_vectors(
        f,
        &left,
        &ModuleAction::new(&left)?,
        &[binary_identity(RIGHT_COMMUTATIVITY)],
    )?;
    let modulo = identities_modulo(f, &cons, &left, &right, &e)?;
    r.check("modulo computation: total rank", 15, modulo.total_rank);
    r.check_true(
        "modulo computation: same identities",
        modulo.identities.equals(&found)?,
    );
    r.table("matrix", format_sign_matrix(&m));
    r.table("row canonical form", format_sign_matrix(&nonzero));
    Ok(r)
}

/// The consequences in degree 5 of the Jordan dialgebra identities: right
/// commutativity taken up twice, the Osborn and right Jordan identities
/// once.
pub fn jordan_dialgebra_consequences_deg5() -> Result<Vec<TermPoly>> {
    let b = Signature::binary();
    let mut out = consequences_to_degree(&[binary_identity(RIGHT_COMMUTATIVITY)], &b, 5)?;
    out.extend(consequences(&binary_identity(OSBORN1), &b)?);
    out.extend(consequences(&binary_identity(RIGHT_JORDAN), &b)?);
    Ok(out)
}

fn jordan_dialgebra_deg5<F: Field>(f: &F) -> Result<Report> {
    let mut r = Report::new("jordan-dialgebra-deg5", 5, f.tag());
    let left = TreeBasis::full(&Signature::binary(), 5)?;
    let right = jordan_triple_basis()?;
    r.check_list(
        "monomials per type",
        &[120, 120, 120, 60, 60, 60, 120, 60, 60, 30],
        &right.type_counts(),
    );
    let cons = jordan_dialgebra_consequences_deg5()?;
    r.check("consequence identities", 42, cons.len());
    let rows = permuted_vectors(f, &left, &ModuleAction::new(&left)?, &cons)?;
    r.check("permuted consequences", 5040, rows.len());
    r.check("left columns", 1680, left.len());
    r.check("right columns", 810, right.len());
    let e = NonassocExpander::new(jd_triples()?, 5)?;
    let m = identities_modulo(f, &rows, &left, &right, &e)?;
    r.matrix_shape = Some([rows.len() + right.len(), left.len() + right.len()]);
    r.rank = Some(m.total_rank);
    r.nullity = Some(m.right_leading());
    r.detail("consequence_rank", m.consequence_rank);
    r.check("total rank", 2215, m.total_rank);
    r.check("rows leading in the left part", 1655, m.left_leading);
    r.check("rows leading in the right part", 560, m.right_leading());

    let action = ModuleAction::new(&right)?;
    let mut cands = m.identities.rcf_rows();
    sort_by_support(f, &mut cands);
    let g = extract_generators(f, &action, &m.identities, &[], &cands)?;
    r.rank_trajectory = g.rank_trajectory.clone();
    r.accepted_indices = g.accepted.iter().map(|i| i + 1).collect();
    r.generators = g
        .generators
        .iter()
        .map(|v| right.format_poly(&right.poly_of(f, v)))
        .collect();
    r.check_list(
        "rank trajectory",
        &[120, 240, 360, 390, 450, 470, 530, 560],
        &g.rank_trajectory,
    );
    r.check("accepted generators", 8, g.generators.len());
    let prune = superfluity_prune(f, &action, 560, &[], &g.generators)?;
    r.check("removable generators", 1, prune.removable.len());
    r.check("generators after pruning", 7, prune.kept.len());
    r.check("span after pruning", 560, prune.span_dim);
    r.detail(
        "removable_indices",
        prune
            .removable
            .iter()
            .map(|&i| g.accepted[i] + 1)
            .collect::<Vec<_>>(),
    );
    let printed = builtin("jd-triple-deg5")?;
    let span = span_of(f, &right, &action, &printed.polys())?;
    r.check_true(
        "printed identities span the same space",
        span.equals(&m.identities)?,
    );
    Ok(r)
}

/// `p` with the sign of its first monomial flipped.
pub fn corrupt_sign(p: &TermPoly) -> TermPoly {
    let mut q = p.clone();
    if let Some((t, c)) = p.iter().next() {
        q.add_term(t.clone(), -*c * 2);
    }
    q
}

fn variety_verification<F: Field>(f: &F) -> Result<Report> {
    let mut r = Report::new("variety-verification", 5, f.tag());
    let jtd = builtin("jtd")?;
    let ids = jtd.polys();
    let j5 = jtd
        .identities
        .iter()
        .position(|(n, _)| n == "J5")
        .expect("J5 present");
    let corrupted = corrupt_sign(&ids[j5]);

    let free = verify_on_free(f, &diproducts()?, &ids)?;
    for ((name, _), ok) in jtd.identities.iter().zip(&free) {
        r.check_true(&format!("{name} holds for the diproducts"), *ok);
    }
    let bad = verify_on_free(f, &diproducts()?, std::slice::from_ref(&corrupted))?;
    r.check_true("corrupted J5 fails for the diproducts", !bad[0]);

    let variety = builtin("jordan-dialgebra")?.polys();
    let mut all = ids.clone();
    all.push(corrupted);
    let modulo = verify_modulo(f, &variety, &jd_triples()?, &triple_signature(), &all)?;
    for ((name, _), ok) in jtd.identities.iter().zip(&modulo) {
        r.check_true(&format!("{name} holds in Jordan dialgebras"), *ok);
    }
    r.check_true(
        "corrupted J5 fails in Jordan dialgebras",
        !modulo[ids.len()],
    );
    Ok(r)
}

fn special_reduction<F: Field>(f: &F) -> Result<Report> {
    let mut r = Report::new("special-reduction", 3, f.tag());
    let special = DiExpander {
        ops: vec![DiOpTemplate::special_jordan_product()],
    };
    for (i, (triple, diproduct)) in [(JD_TRIPLE1, DIPRODUCT1), (JD_TRIPLE2, DIPRODUCT2)]
        .iter()
        .enumerate()
    {
        let lhs = special.expand_poly(&NonassocOpTemplate::parse(triple)?.poly)?;
        let rhs = DiOpTemplate::parse(diproduct)?
            .as_poly()
            .scaled(Coeff::from_integer(2));
        r.detail(&format!("triple{}", i + 1), lhs.to_string());
        r.check(
            &format!("triple {} reduces to twice diproduct {}", i + 1, i + 1),
            rhs.to_string(),
            lhs.to_string(),
        );
        let d = 3;
        let (a, b) = (
            special.expansion_vector(f, d, &NonassocOpTemplate::parse(triple)?.poly)?,
            {
                let mut v = vec![f.zero(); special.target_dim(d)];
                for (m, c) in rhs.iter() {
                    let k = special.target_index(m)?;
                    v[k] = f.add(&v[k], &f.from_coeff(c)?);
                }
                v
            },
        );
        r.check_true(
            &format!("triple {} coefficient vectors agree", i + 1),
            a == b,
        );
    }
    Ok(r)
}

fn instance_suite(f: PrimeField, cfg: &ExperimentConfig) -> Result<Report> {
    let mut r = Report::new("instance-suite", 5, f.tag());
    r.detail("seed", cfg.seed);
    r.detail("trials", cfg.trials);
    let base = Algebra::matrices(f, 2).adjoin_square_zero();
    let d = LinearMap::d_theta(4);
    let di = make_differential_dialgebra(&base, &d)?;
    r.check("dialgebra dimension", 8, di.dim());
    r.check("failed dialgebra axioms", 0, di.failed_axioms().len());
    let jtd = builtin("jtd")?;
    let j5 = jtd
        .identities
        .iter()
        .position(|(n, _)| n == "J5")
        .expect("J5 present");

    let example = FnOps {
        field: f,
        dim: di.dim(),
        f: |op: usize, x: &[Vector]| {
            let da = |v: &Vector| d.apply(&f, v);
            let m3 = |p: &Vector, q: &Vector, s: &Vector| base.mul(&base.mul(p, q), s);
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            let (u, v) = if op == 0 {
                (m3(a, &da(b), &da(c)), m3(&da(c), &da(b), a))
            } else {
                (m3(&da(a), b, &da(c)), m3(&da(c), b, &da(a)))
            };
            u.iter().zip(&v).map(|(s, t)| f.add(s, t)).collect()
        },
    };
    let rep = verify_on_instance(&example, &jtd.identities, cfg.trials, cfg.seed)?;
    r.check(
        "violations of J1-J8 by the differential operations",
        0,
        rep.total_violations(),
    );
    let mut bad = jtd.identities.clone();
    bad[j5].1 = corrupt_sign(&bad[j5].1);
    let rep_bad = verify_on_instance(&example, &bad[j5..=j5], cfg.trials, cfg.seed)?;
    r.detail("corrupted_j5_violations", rep_bad.total_violations());
    r.check_true("corrupted J5 is violated", rep_bad.total_violations() > 0);

    let lifted = DialgebraOps {
        algebra: &di,
        ops: diproducts()?.ops,
    };
    let rep = verify_on_instance(&lifted, &jtd.identities, cfg.trials, cfg.seed)?;
    r.check(
        "violations of J1-J8 by the diproducts",
        0,
        rep.total_violations(),
    );

    let m2 = Algebra::matrices(f, 2);
    let jtp = GroupAlgebraOp::parse("abc + cba")?;
    let assoc = AssociativeOps {
        algebra: &m2,
        ops: vec![jtp.clone(), jtp],
    };
    let rep = verify_on_instance(&assoc, &jtd.identities, cfg.trials, cfg.seed)?;
    r.check(
        "violations of J1-J8 by abc + cba in matrices",
        0,
        rep.total_violations(),
    );

    let jordan = di.jordan_product();
    let triples = ProductOps {
        algebra: &jordan,
        ops: jd_triples()?,
    };
    let rep = verify_on_instance(&triples, &jtd.identities, cfg.trials, cfg.seed)?;
    r.check(
        "violations of J1-J8 by the Jordan dialgebra triples",
        0,
        rep.total_violations(),
    );
    let ops = FnOps {
        field: f,
        dim: di.dim(),
        f: |op: usize, x: &[Vector]| {
            let t = triples.apply(op % 2, x);
            if op < 2 {
                t
            } else {
                lifted.apply(op - 2, x)
            }
        },
    };
    let four = Signature::uniform(4, 3);
    let halves = vec![
        (
            "triple 1 = 2 diproduct 1".to_string(),
            parse_identity("{a,b,c}_1 - 2{a,b,c}_3", &four)?,
        ),
        (
            "triple 2 = 2 diproduct 2".to_string(),
            parse_identity("{a,b,c}_2 - 2{a,b,c}_4", &four)?,
        ),
    ];
    let rep = verify_on_instance(&ops, &halves, cfg.trials, cfg.seed)?;
    r.check(
        "triples differ from twice the diproducts",
        0,
        rep.total_violations(),
    );
    Ok(r)
}
