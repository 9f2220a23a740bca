//! Identities of operations by the nullspace method, module generators by
//! fill-and-reduce, consequences of lower-degree identities, and identities
//! holding modulo a variety.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::basis::TreeBasis;
use crate::error::{Error, Result};
use crate::expansion::{build_expansion_matrix, Expander, ExpansionMatrix};
use crate::field::Field;
use crate::linalg::{nullspace_from_rcf, rcf, support_size, DenseMatrix, Subspace};
use crate::perm::Permutation;
use crate::term::{Signature, Term, TermPoly};

/// Orders vectors by support size, then lexicographically.
pub fn sort_by_support<F: Field>(field: &F, vs: &mut [Vec<F::Elem>]) {
    vs.sort_by(|a, b| {
        support_size(field, a)
            .cmp(&support_size(field, b))
            .then_with(|| {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| field.cmp_elems(x, y))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
}

/// The expansion matrix of a basis and its identities.
#[derive(Clone, Debug)]
pub struct Identities<F: Field> {
    pub matrix: ExpansionMatrix<F>,
    pub rank: usize,
    /// Canonical nullspace basis sorted by support size.
    pub identities: Vec<Vec<F::Elem>>,
}

impl<F: Field> Identities<F> {
    pub fn nullity(&self) -> usize {
        self.identities.len()
    }
}

pub fn find_identities<F: Field, E: Expander>(
    field: &F,
    source: &TreeBasis,
    expander: &E,
) -> Result<Identities<F>> {
    let matrix = build_expansion_matrix(field, source, expander)?;
    let r = rcf(&matrix.matrix);
    let mut identities = nullspace_from_rcf(&r);
    sort_by_support(field, &mut identities);
    Ok(Identities {
        matrix,
        rank: r.rank,
        identities,
    })
}

/// The action of every permutation of the variables on a tree basis.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    tables: Vec<Vec<usize>>,
}

impl ModuleAction {
    pub fn new(basis: &TreeBasis) -> Result<Self> {
        let tables = Permutation::all(basis.degree())
            .par_iter()
            .map(|s| basis.action_table(s))
            .collect::<Result<_>>()?;
        Ok(ModuleAction { tables })
    }

    /// All permuted copies of `v`, in lexicographic order of the
    /// permutations.
    pub fn orbit<F: Field>(&self, field: &F, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        self.tables
            .iter()
            .map(|t| {
                let mut out = vec![field.zero(); v.len()];
                for (i, x) in v.iter().enumerate() {
                    if !field.is_zero(x) {
                        out[t[i]] = field.add(&out[t[i]], x);
                    }
                }
                out
            })
            .collect()
    }

    /// Span of all permuted copies of the given vectors.
    pub fn module_span<F: Field>(
        &self,
        field: &F,
        dim: usize,
        vs: &[Vec<F::Elem>],
    ) -> Result<Subspace<F>> {
        let mut s = Subspace::new(field.clone(), dim);
        self.extend_span(field, &mut s, vs)?;
        Ok(s)
    }

    /// Adds the permuted copies of each vector to a span that is already
    /// closed under permutations.
    pub fn extend_span<F: Field>(
        &self,
        field: &F,
        s: &mut Subspace<F>,
        vs: &[Vec<F::Elem>],
    ) -> Result<()> {
        for v in vs {
            if !s.contains(v)? {
                s.extend(self.orbit(field, v))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorReport<F: Field> {
    /// Dimension spanned by the seeds and their permutations.
    pub seed_dim: usize,
    /// Indices of the accepted candidates.
    pub accepted: Vec<usize>,
    /// Span dimension after each accepted candidate.
    pub rank_trajectory: Vec<usize>,
    pub generators: Vec<Vec<F::Elem>>,
    pub final_dim: usize,
    pub target_dim: usize,
}

/// Fill-and-reduce: fold in the seeds, then accept each candidate whose
/// permutations enlarge the span, until the span reaches `space`.
pub fn extract_generators<F: Field>(
    field: &F,
    action: &ModuleAction,
    space: &Subspace<F>,
    seeds: &[Vec<F::Elem>],
    candidates: &[Vec<F::Elem>],
) -> Result<GeneratorReport<F>> {
    for v in seeds.iter().chain(candidates) {
        if !space.contains(v)? {
            return Err(Error::Inconsistent(
                "generator candidate outside the identity space".into(),
            ));
        }
    }
    let dim = space.ambient_dim();
    let mut span = action.module_span(field, dim, seeds)?;
    let seed_dim = span.dim();
    let mut report = GeneratorReport {
        seed_dim,
        accepted: Vec::new(),
        rank_trajectory: Vec::new(),
        generators: Vec::new(),
        final_dim: seed_dim,
        target_dim: space.dim(),
    };
    for (i, c) in candidates.iter().enumerate() {
        if span.dim() == space.dim() {
            break;
        }
        if span.contains(c)? {
            continue;
        }
        span.extend(action.orbit(field, c))?;
        report.accepted.push(i);
        report.rank_trajectory.push(span.dim());
        report.generators.push(c.clone());
    }
    report.final_dim = span.dim();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruneReport {
    /// Generators whose removal alone keeps the full span.
    pub removable: Vec<usize>,
    /// Generators left after greedy removal in order.
    pub kept: Vec<usize>,
    /// Dimension spanned by the seeds and the kept generators.
    pub span_dim: usize,
    /// No generator can be dropped.
    pub independent: bool,
}

/// Tests each generator for superfluity against the others (plus seeds),
/// then removes superfluous ones greedily in order.
pub fn superfluity_prune<F: Field>(
    field: &F,
    action: &ModuleAction,
    target_dim: usize,
    seeds: &[Vec<F::Elem>],
    generators: &[Vec<F::Elem>],
) -> Result<PruneReport> {
    let dim = generators.first().or(seeds.first()).map_or(0, Vec::len);
    let spans = |keep: &[usize]| -> Result<usize> {
        let mut vs: Vec<Vec<F::Elem>> = seeds.to_vec();
        vs.extend(keep.iter().map(|&i| generators[i].clone()));
        Ok(action.module_span(field, dim, &vs)?.dim())
    };
    let removable = (0..generators.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<usize> = (0..generators.len()).filter(|&j| j != i).collect();
            Ok((i, spans(&others)? == target_dim))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(i, r)| r.then_some(i))
        .collect::<Vec<_>>();
    let mut kept: Vec<usize> = (0..generators.len()).collect();
    for &i in &removable {
        let trial: Vec<usize> = kept.iter().copied().filter(|&j| j != i).collect();
        if spans(&trial)? == target_dim {
            kept = trial;
        }
    }
    let span_dim = spans(&kept)?;
    Ok(PruneReport {
        independent: removable.is_empty(),
        removable,
        kept,
        span_dim,
    })
}

/// The identities of degree `m + r - 1` obtained from one of degree `m`
/// for each operation of arity `r`: substitute `op(a_i, new..)` for each
/// variable `a_i`, then put the whole identity in each argument position
/// of `op` with new variables elsewhere. For one binary product these are
/// the `m` substitutions `a_i -> a_i a_{m+1}`, then right and left
/// multiplication by `a_{m+1}`.
pub fn consequences(id: &TermPoly, sig: &Signature) -> Result<Vec<TermPoly>> {
    let m = crate::parse::check_multilinear(id, "identity")?;
    let mut out = Vec::new();
    for k in 0..sig.op_count() {
        let r = sig.arity(k);
        let fresh = || -> Vec<Term> { (0..r - 1).map(|t| Term::Var((m + t) as u8)).collect() };
        for i in 0..m {
            let mut args: Vec<TermPoly> = (0..m)
                .map(|v| TermPoly::monomial(Term::Var(v as u8)))
                .collect();
            let mut children = vec![Term::Var(i as u8)];
            children.extend(fresh());
            args[i] = TermPoly::monomial(Term::Op(k, children));
            out.push(id.flat_map(|t| t.substitute(&args)));
        }
        for pos in 0..r {
            out.push(id.map_monomials(|t| {
                let mut children = fresh();
                children.insert(pos, t.clone());
                Term::Op(k, children)
            }));
        }
    }
    Ok(out)
}

/// Repeated consequences until `degree` is reached; identities already of
/// that degree pass through.
pub fn consequences_to_degree(
    ids: &[TermPoly],
    sig: &Signature,
    degree: usize,
) -> Result<Vec<TermPoly>> {
    let mut out = Vec::new();
    let mut frontier: Vec<TermPoly> = ids.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for id in frontier {
            let d = crate::parse::check_multilinear(&id, "identity")?;
            match d.cmp(&degree) {
                Ordering::Equal => out.push(id),
                Ordering::Less => next.extend(consequences(&id, sig)?),
                Ordering::Greater => return Err(Error::IncompatibleDegree { degree }),
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Result of `identities_modulo`: the ranks of the block matrix
/// `[C | 0; X | I]` and the rows whose leading entry is in the right part.
#[derive(Clone, Debug)]
pub struct ModuloReport<F: Field> {
    pub consequence_rows: usize,
    pub left_cols: usize,
    pub right_cols: usize,
    pub consequence_rank: usize,
    pub total_rank: usize,
    pub left_leading: usize,
    /// The identities of the operations, as the row canonical form of the
    /// right-leading rows.
    pub identities: Subspace<F>,
}

impl<F: Field> ModuloReport<F> {
    pub fn right_leading(&self) -> usize {
        self.identities.dim()
    }
}

/// Identities satisfied by the operations of `source` (expanded by
/// `expander` into `left`) modulo the span of the consequence vectors
/// `consequences` in the `left` basis.
///
/// Instead of eliminating the whole block matrix, each expansion is reduced
/// modulo the row space of `C`; the right-leading rows of the block rcf are
/// the row canonical form of the relations among these remainders.
pub fn identities_modulo<F: Field, E: Expander>(
    field: &F,
    consequences: &[Vec<F::Elem>],
    left: &TreeBasis,
    source: &TreeBasis,
    expander: &E,
) -> Result<ModuloReport<F>> {
    let n_left = left.len();
    let mut c_space = Subspace::new(field.clone(), n_left);
    c_space.extend(consequences.iter().cloned())?;
    let pivots = c_space.pivots();
    let mut is_pivot = vec![false; n_left];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n_left).filter(|&c| !is_pivot[c]).collect();
    let degree = source.degree();
    if expander.target_dim(degree) != n_left {
        return Err(Error::DimensionMismatch {
            expected: n_left,
            found: expander.target_dim(degree),
        });
    }
    let residues: Vec<Vec<F::Elem>> = (0..source.len())
        .into_par_iter()
        .map(|j| {
            let mut x = expander.expansion_vector(
                field,
                degree,
                &TermPoly::monomial(source.monomial(j)),
            )?;
            c_space.reduce(&mut x)?;
            Ok(free.iter().map(|&c| x[c].clone()).collect())
        })
        .collect::<Result<_>>()?;
    // Relations y with sum y_j r_j = 0: the nullspace of the transpose.
    let rt = DenseMatrix::from_rows(field.clone(), free.len(), residues)?.transpose();
    let r = rcf(&rt);
    let identities = Subspace::from_rows(field.clone(), source.len(), nullspace_from_rcf(&r))?;
    Ok(ModuloReport {
        consequence_rows: consequences.len(),
        left_cols: n_left,
        right_cols: source.len(),
        consequence_rank: c_space.dim(),
        total_rank: c_space.dim() + source.len(),
        left_leading: c_space.dim() + r.rank,
        identities,
    })
}

/// Coefficient vectors of the given identities and all their permutations.
pub fn permuted_vectors<F: Field>(
    field: &F,
    basis: &TreeBasis,
    action: &ModuleAction,
    ids: &[TermPoly],
) -> Result<Vec<Vec<F::Elem>>> {
    let mut out = Vec::with_capacity(ids.len() * action.tables.len());
    for id in ids {
        out.extend(action.orbit(field, &basis.field_vector(field, id)?));
    }
    Ok(out)
}

/// Whether every identity vanishes under the expansion.
pub fn vanishes<F: Field, E: Expander>(
    field: &F,
    degree: usize,
    expander: &E,
    id: &TermPoly,
) -> Result<bool> {
    Ok(expander
        .expansion_vector(field, degree, id)?
        .iter()
        .all(|x| field.is_zero(x)))
}
