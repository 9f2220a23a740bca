//! Comparison of the identities produced by the KP construction from the
//! identities of an operation `ω` with the identities satisfied by the BSO
//! lifts of `ω` in the free dialgebra.

use serde::Serialize;

use crate::basis::TreeBasis;
use crate::bso::bso;
use crate::engine::{consequences_to_degree, find_identities, ModuleAction};
use crate::error::{Error, Result};
use crate::expansion::{AssocExpander, DiExpander, GroupAlgebraOp};
use crate::field::Field;
use crate::kp::{kp_part1, kp_part2};
use crate::linalg::Subspace;
use crate::term::{Signature, TermPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComparison {
    pub degree: usize,
    /// Dimension of the identities of `ω` in this degree.
    pub omega_dim: usize,
    pub kp_dim: usize,
    pub j_dim: usize,
    pub kp_in_j: bool,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub omega: String,
    pub arity: usize,
    pub degree: usize,
    /// KP applied to the identities of each degree on their own, with the
    /// Part 2 identities only in degree `2n - 1`.
    pub degreewise: Vec<DegreeComparison>,
    /// KP in degree `d` together with the consequences of every
    /// lower-degree KP identity and of Part 2.
    pub embedded: DegreeComparison,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.embedded.equal
    }
}

/// The degrees `1 + k(n - 1)`, `k >= 1`, up to `d`.
pub fn compatible_degrees(arity: usize, d: usize) -> Result<Vec<usize>> {
    if arity < 2 || d < arity || !(d - 1).is_multiple_of(arity - 1) {
        return Err(Error::IncompatibleDegree { degree: d });
    }
    Ok((arity..=d).step_by(arity - 1).collect())
}

/// Identities of `ω` of one degree, as polynomials.
fn omega_identities<F: Field>(
    field: &F,
    omega: &GroupAlgebraOp,
    degree: usize,
) -> Result<Vec<TermPoly>> {
    let basis = TreeBasis::full(&Signature::uniform(1, omega.arity), degree)?;
    let ids = find_identities(
        field,
        &basis,
        &AssocExpander {
            ops: vec![omega.clone()],
        },
    )?;
    Ok(ids
        .identities
        .iter()
        .map(|v| basis.poly_of(field, v))
        .collect())
}

fn kp_of(ids: &[TermPoly], n: usize) -> Result<Vec<TermPoly>> {
    let mut out = Vec::new();
    for id in ids {
        out.extend(kp_part1(id, n)?);
    }
    Ok(out)
}

fn compare<F: Field>(
    field: &F,
    basis: &TreeBasis,
    omega_dim: usize,
    kp: &[TermPoly],
    j: &Subspace<F>,
) -> Result<DegreeComparison> {
    let action = ModuleAction::new(basis)?;
    let vs = kp
        .iter()
        .map(|p| basis.field_vector(field, p))
        .collect::<Result<Vec<_>>>()?;
    let kp_space = action.module_span(field, basis.len(), &vs)?;
    let kp_in_j = j.contains_subspace(&kp_space)?;
    Ok(DegreeComparison {
        degree: basis.degree(),
        omega_dim,
        kp_dim: kp_space.dim(),
        j_dim: j.dim(),
        kp_in_j,
        equal: kp_in_j && kp_space.dim() == j.dim(),
    })
}

pub fn check_conjecture<F: Field>(
    field: &F,
    omega: &GroupAlgebraOp,
    d: usize,
) -> Result<ConjectureReport> {
    let n = omega.arity;
    let degrees = compatible_degrees(n, d)?;
    let sig = Signature::uniform(n, n);
    let lifted = DiExpander { ops: bso(omega) };
    let mut degreewise = Vec::new();
    let mut lower: Vec<TermPoly> = Vec::new();
    let mut embedded = None;
    for &e in &degrees {
        let ids = omega_identities(field, omega, e)?;
        let mut kp = kp_of(&ids, n)?;
        if e == 2 * n - 1 {
            kp.extend(kp_part2(n));
        }
        let basis = TreeBasis::full(&sig, e)?;
        let j = find_identities(field, &basis, &lifted)?;
        let j_space = Subspace::from_rows(field.clone(), basis.len(), j.identities)?;
        degreewise.push(compare(field, &basis, ids.len(), &kp, &j_space)?);
        if e == d {
            let mut all = consequences_to_degree(&lower, &sig, d)?;
            all.extend(kp.iter().cloned());
            embedded = Some(compare(field, &basis, ids.len(), &all, &j_space)?);
        }
        lower.extend(kp.into_iter().filter(|p| !p.is_zero()));
    }
    Ok(ConjectureReport {
        omega: omega.to_string(),
        arity: n,
        degree: d,
        degreewise,
        embedded: embedded.expect("d is the last compatible degree"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn associative_product() {
        let f = PrimeField::new(101).unwrap();
        let r = check_conjecture(&f, &GroupAlgebraOp::parse("ab").unwrap(), 3).unwrap();
        assert!(r.holds());
        assert_eq!(r.degreewise.len(), 2);
        assert_eq!(r.embedded.j_dim, 30);
        assert!(compatible_degrees(3, 4).is_err());
    }
}
