//! The Bremner–Sánchez-Ortega construction: an `n`-ary operation in an
//! associative algebra becomes `n` dialgebra operations, the `i`-th one
//! putting the hat on argument `i` in every term.

use crate::expansion::{DiOpTemplate, GroupAlgebraOp};
use crate::perm::Permutation;

/// The `n` lifted operations, in argument order.
pub fn bso(omega: &GroupAlgebraOp) -> Vec<DiOpTemplate> {
    (0..omega.arity)
        .map(|i| DiOpTemplate {
            arity: omega.arity,
            terms: omega
                .terms
                .iter()
                .map(|(sigma, c)| (sigma.clone(), sigma.inverse().apply(i), *c))
                .collect(),
        })
        .collect()
}

/// `op(a_1, .., a_n) = other(a_tau(1), .., a_tau(n))` between two lifted
/// operations (zero based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftRelation {
    pub op: usize,
    pub other: usize,
    pub tau: Permutation,
}

impl LiftRelation {
    /// True when `op` is a permuted copy of an earlier operation.
    pub fn is_duplicate(&self) -> bool {
        self.other < self.op
    }
}

/// `template` with its arguments permuted: `t(a_tau(1), .., a_tau(n))`.
pub fn permute_arguments(template: &DiOpTemplate, tau: &Permutation) -> DiOpTemplate {
    DiOpTemplate {
        arity: template.arity,
        terms: template
            .terms
            .iter()
            .map(|(s, j, c)| (tau.compose(s), *j, *c))
            .collect(),
    }
}

/// Every relation `ops[i] = ops[k] o tau` with `k <= i`, excluding the
/// trivial one. Relations with `k < i` mark duplicated operations, those
/// with `k = i` are symmetries.
pub fn lift_relations(ops: &[DiOpTemplate]) -> Vec<LiftRelation> {
    let mut out = Vec::new();
    for (i, op) in ops.iter().enumerate() {
        let target = op.as_poly();
        for (k, other) in ops.iter().enumerate().take(i + 1) {
            if other.arity != op.arity {
                continue;
            }
            for tau in Permutation::all(op.arity) {
                if k == i && tau.is_identity() {
                    continue;
                }
                if permute_arguments(other, &tau).as_poly() == target {
                    out.push(LiftRelation {
                        op: i,
                        other: k,
                        tau,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::erase_centers;

    #[test]
    fn jordan_triple_product() {
        let omega = GroupAlgebraOp::parse("abc + cba").unwrap();
        let ops = bso(&omega);
        let printed = ["^abc + cb^a", "a^bc + c^ba", "ab^c + ^cba"];
        for (op, p) in ops.iter().zip(printed) {
            assert_eq!(op.as_poly(), DiOpTemplate::parse(p).unwrap().as_poly());
            assert!(erase_centers(&op.as_poly()) == omega.as_poly());
        }
        let rev = Permutation::from_images(vec![2, 1, 0]).unwrap();
        let rel = lift_relations(&ops);
        assert_eq!(
            rel,
            vec![
                LiftRelation {
                    op: 1,
                    other: 1,
                    tau: rev.clone()
                },
                LiftRelation {
                    op: 2,
                    other: 0,
                    tau: rev
                },
            ]
        );
        assert!(rel[1].is_duplicate());
    }

    #[test]
    fn lie_bracket_gives_leibniz_shape() {
        let ops = bso(&GroupAlgebraOp::parse("ab - ba").unwrap());
        assert_eq!(
            ops[0].as_poly(),
            DiOpTemplate::parse("^ab - b^a").unwrap().as_poly()
        );
        assert_eq!(
            ops[1].as_poly(),
            DiOpTemplate::parse("a^b - ^ba").unwrap().as_poly()
        );
    }

    #[test]
    fn single_word() {
        let ops = bso(&GroupAlgebraOp::parse("bca").unwrap());
        assert_eq!(
            ops[0].as_poly(),
            DiOpTemplate::parse("bc^a").unwrap().as_poly()
        );
        assert_eq!(
            ops[1].as_poly(),
            DiOpTemplate::parse("^bca").unwrap().as_poly()
        );
        assert!(lift_relations(&ops).is_empty());
    }
}
