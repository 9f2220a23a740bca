//! The computations behind each command-line subcommand, producing
//! reports.

use crate::basis::TreeBasis;
use crate::bso::{bso, lift_relations};
use crate::conjecture::check_conjecture;
use crate::engine::{extract_generators, find_identities, superfluity_prune, ModuleAction};
use crate::error::{Error, Result};
use crate::expansion::{
    build_expansion_matrix, erase_centers, AssocExpander, DiExpander, GroupAlgebraOp,
    NonassocExpander,
};
use crate::field::{Field, FieldTag, PrimeField, Rationals};
use crate::kp::{erase_subscripts, kp_part1, kp_part2};
use crate::linalg::Subspace;
use crate::parse::check_multilinear;
use crate::report::Report;
use crate::term::{Signature, TermPoly};
use crate::varieties::{verify_modulo, verify_on_free, Operations, OpsSpec, VarietySpec};

macro_rules! in_field {
    ($tag:expr, $degree:expr, |$f:ident| $body:expr) => {
        match $tag {
            FieldTag::Rational => {
                let $f = &Rationals;
                $body
            }
            FieldTag::Prime(p) => {
                let $f = &PrimeField::for_degree(p, $degree)?;
                $body
            }
        }
    };
}

macro_rules! with_expander {
    ($ops:expr, $degree:expr, |$e:ident| $body:expr) => {
        match $ops {
            Operations::Associative(v) => {
                let $e = AssocExpander { ops: v.clone() };
                $body
            }
            Operations::Dialgebra(v) => {
                let $e = DiExpander { ops: v.clone() };
                $body
            }
            Operations::Nonassociative(v) => {
                let $e = NonassocExpander::new(v.clone(), $degree)?;
                $body
            }
        }
    };
}

/// The expansion matrix of every monomial of one degree.
pub fn expand(field: FieldTag, ops: &OpsSpec, degree: usize) -> Result<Report> {
    in_field!(field, degree, |f| {
        let basis = TreeBasis::full(&ops.signature, degree)?;
        let m = with_expander!(&ops.ops, degree, |e| build_expansion_matrix(f, &basis, &e)?);
        let rank = crate::linalg::rcf(&m.matrix).rank;
        let mut r = Report::new("expand", degree, f.tag());
        r.matrix_shape = Some([m.matrix.rows(), m.matrix.cols()]);
        r.rank = Some(rank);
        r.nullity = Some(m.matrix.cols() - rank);
        r.detail("columns", &m.col_labels);
        r.detail("rows", &m.row_labels);
        r.detail(
            "matrix",
            (0..m.matrix.rows())
                .map(|i| {
                    m.matrix
                        .row(i)
                        .iter()
                        .map(|x| f.format(x))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>(),
        );
        r.table("expansion matrix", m.to_tsv());
        Ok(r)
    })
}

/// All identities of one degree, sorted by support size.
pub fn identities(field: FieldTag, ops: &OpsSpec, degree: usize) -> Result<Report> {
    in_field!(field, degree, |f| {
        let basis = TreeBasis::full(&ops.signature, degree)?;
        let ids = with_expander!(&ops.ops, degree, |e| find_identities(f, &basis, &e)?);
        let mut r = Report::new("identities", degree, f.tag());
        let (rows, cols) = ids.matrix.matrix.shape();
        r.matrix_shape = Some([rows, cols]);
        r.rank = Some(ids.rank);
        r.nullity = Some(ids.nullity());
        r.check("rank + nullity", cols, ids.rank + ids.nullity());
        r.generators = ids
            .identities
            .iter()
            .map(|v| basis.format_poly(&basis.poly_of(f, v)))
            .collect();
        Ok(r)
    })
}

/// Module generators of the identities of one degree, after the given
/// seeds, and the generators that can be dropped.
pub fn generators(
    field: FieldTag,
    ops: &OpsSpec,
    degree: usize,
    seeds: &[TermPoly],
) -> Result<Report> {
    in_field!(field, degree, |f| {
        let basis = TreeBasis::full(&ops.signature, degree)?;
        let ids = with_expander!(&ops.ops, degree, |e| find_identities(f, &basis, &e)?);
        let mut seed_vs = Vec::new();
        for s in seeds {
            if check_multilinear(s, "seed")? == degree {
                seed_vs.push(basis.field_vector(f, s)?);
            }
        }
        let action = ModuleAction::new(&basis)?;
        let space = Subspace::from_rows(f.clone(), basis.len(), ids.identities.clone())?;
        let g = extract_generators(f, &action, &space, &seed_vs, &ids.identities)?;
        let prune = superfluity_prune(f, &action, space.dim(), &seed_vs, &g.generators)?;
        let mut r = Report::new("generators", degree, f.tag());
        let (rows, cols) = ids.matrix.matrix.shape();
        r.matrix_shape = Some([rows, cols]);
        r.rank = Some(ids.rank);
        r.nullity = Some(ids.nullity());
        r.rank_trajectory = g.rank_trajectory.clone();
        r.accepted_indices = g.accepted.iter().map(|i| i + 1).collect();
        r.generators = g
            .generators
            .iter()
            .map(|v| basis.format_poly(&basis.poly_of(f, v)))
            .collect();
        r.detail("seed_dim", g.seed_dim);
        r.detail(
            "removable",
            prune.removable.iter().map(|i| i + 1).collect::<Vec<_>>(),
        );
        r.detail("kept", prune.kept.iter().map(|i| i + 1).collect::<Vec<_>>());
        r.check("generated dimension", ids.nullity(), g.final_dim);
        r.check("dimension after pruning", ids.nullity(), prune.span_dim);
        Ok(r)
    })
}

/// KP Part 1 of every identity of a one-operation variety, and Part 2.
pub fn kp(variety: &VarietySpec) -> Result<Report> {
    let [op] = &variety.signature.ops[..] else {
        return Err(Error::Malformed(
            "the KP construction needs exactly one operation".into(),
        ));
    };
    let n = op.arity;
    let out_sig = Signature::uniform(n, n);
    let mut r = Report::new("kp", 2 * n - 1, FieldTag::Rational);
    r.field = "none".into();
    let mut part1 = Vec::new();
    for (name, id) in &variety.identities {
        let outs = kp_part1(id, n)?;
        r.degree = r.degree.max(check_multilinear(id, name)?);
        r.check_true(
            &format!("{name}: outputs erase to the input"),
            outs.iter().all(|p| erase_subscripts(p) == *id),
        );
        for (k, p) in outs.iter().enumerate() {
            part1.push((format!("{name}.{}", k + 1), out_sig.format_poly(p)));
        }
    }
    let part2: Vec<String> = kp_part2(n).iter().map(|p| out_sig.format_poly(p)).collect();
    r.generators = part1
        .iter()
        .map(|(_, p)| p.clone())
        .chain(part2.iter().cloned())
        .collect();
    r.detail("part1", &part1);
    r.detail("part2", &part2);
    Ok(r)
}

/// The BSO lifts of `ω` and the relations among them.
pub fn bso_command(omega: &GroupAlgebraOp) -> Result<Report> {
    let ops = bso(omega);
    let mut r = Report::new("bso", omega.arity, FieldTag::Rational);
    r.field = "none".into();
    r.generators = ops.iter().map(ToString::to_string).collect();
    for (i, op) in ops.iter().enumerate() {
        r.check_true(
            &format!("op{} erases to the input", i + 1),
            erase_centers(&op.as_poly()) == omega.as_poly(),
        );
    }
    let sig = Signature::uniform(ops.len(), omega.arity);
    let rels: Vec<String> = lift_relations(&ops)
        .iter()
        .map(|rel| {
            let args: Vec<crate::term::Term> = rel
                .tau
                .images()
                .iter()
                .map(|&v| crate::term::Term::Var(v))
                .collect();
            let lhs = crate::term::Term::Op(
                rel.op,
                (0..omega.arity as u8).map(crate::term::Term::Var).collect(),
            );
            let rhs = crate::term::Term::Op(rel.other, args);
            format!("{} = {}", sig.format_term(&lhs), sig.format_term(&rhs))
        })
        .collect();
    r.detail("relations", rels);
    Ok(r)
}

/// Both views of the KP / BSO comparison for `ω` up to degree `d`.
pub fn conjecture(field: FieldTag, omega: &GroupAlgebraOp, degree: usize) -> Result<Report> {
    in_field!(field, degree, |f| {
        let c = check_conjecture(f, omega, degree)?;
        let mut r = Report::new("conjecture", degree, f.tag());
        for d in &c.degreewise {
            r.check_true(&format!("degree {}: KP inside J", d.degree), d.kp_in_j);
        }
        r.check_true(
            &format!("degree {degree}: KP with consequences equals J"),
            c.embedded.equal,
        );
        r.nullity = Some(c.embedded.j_dim);
        r.detail("omega", &c.omega);
        r.detail("degreewise", &c.degreewise);
        r.detail("embedded", &c.embedded);
        Ok(r)
    })
}

/// Whether each identity of `variety` holds for `ops`: in the free
/// structure, or for one binary product modulo the identities of `modulo`.
pub fn verify(
    field: FieldTag,
    variety: &VarietySpec,
    ops: &OpsSpec,
    modulo: Option<&VarietySpec>,
) -> Result<Report> {
    let arities = ops.ops.arities();
    if variety.signature.op_count() != arities.len() {
        return Err(Error::DimensionMismatch {
            expected: arities.len(),
            found: variety.signature.op_count(),
        });
    }
    for (k, (sig, &a)) in variety.signature.ops.iter().zip(&arities).enumerate() {
        if sig.arity != a {
            return Err(Error::ArityMismatch {
                op: k + 1,
                expected: a,
                found: sig.arity,
            });
        }
    }
    let ids = variety.polys();
    let degree = ids
        .iter()
        .map(|p| check_multilinear(p, "identity"))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    in_field!(field, degree, |f| {
        let holds = match (&ops.ops, modulo) {
            (Operations::Nonassociative(v), m) => {
                let var = m.map(VarietySpec::polys).unwrap_or_default();
                verify_modulo(f, &var, v, &variety.signature, &ids)?
            }
            (_, Some(_)) => {
                return Err(Error::Malformed(
                    "--modulo applies to operations in one binary product".into(),
                ))
            }
            (Operations::Dialgebra(v), None) => {
                verify_on_free(f, &DiExpander { ops: v.clone() }, &ids)?
            }
            (Operations::Associative(v), None) => {
                verify_on_free(f, &AssocExpander { ops: v.clone() }, &ids)?
            }
        };
        let mut r = Report::new("verify", degree, f.tag());
        r.detail("variety", &variety.name);
        for ((name, _), ok) in variety.identities.iter().zip(holds) {
            r.check_true(&format!("{name} holds"), ok);
        }
        Ok(r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::builtin;

    #[test]
    fn jts_kp_counts() {
        let r = kp(&builtin("jts").unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.generators.len(), 3 + 5 + 12);
        assert!(kp(&builtin("jtd").unwrap()).is_err());
    }

    #[test]
    fn bso_relations() {
        let r = bso_command(&GroupAlgebraOp::parse("abc+cba").unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.details["relations"],
            serde_json::json!(["op2(a,b,c) = op2(c,b,a)", "op3(a,b,c) = op1(c,b,a)"])
        );
    }

    #[test]
    fn verify_detects_corruption() {
        let ops = OpsSpec::from_builtin("diproducts").unwrap();
        let mut v = builtin("jtd").unwrap();
        let field = FieldTag::Prime(101);
        assert!(verify(field, &v, &ops, None).unwrap().passed());
        let (t, c) = v.identities[4]
            .1
            .iter()
            .next()
            .map(|(t, c)| (t.clone(), *c))
            .unwrap();
        v.identities[4].1.add_term(t, -c * 2);
        let r = verify(field, &v, &ops, None).unwrap();
        assert_eq!(r.failed_checks().len(), 1);
        assert_eq!(r.failed_checks()[0].name, "J5 holds");
    }
}
