use dialgebra::basis::TreeBasis;
use dialgebra::bso::bso;
use dialgebra::dialgebra::{DiMonomial, DiOp, DiPoly, DiTree};
use dialgebra::engine::find_identities;
use dialgebra::expansion::{
    erase_centers, substitute_di, DiExpander, DiOpTemplate, GroupAlgebraOp,
};
use dialgebra::experiments::diproduct1_basis;
use dialgebra::field::{Coeff, Field, PrimeField, Rationals};
use dialgebra::kp::{erase_subscripts, kp_part1};
use dialgebra::linalg::{nullspace_basis, rcf, DenseMatrix, Subspace};
use dialgebra::perm::Permutation;
use dialgebra::term::Signature;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..8)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
}

/// A random tree on the given letters.
fn tree_on(word: Vec<u8>) -> impl Strategy<Value = DiTree> {
    let trees = DiTree::all_on_word(&word);
    (0..trees.len()).prop_map(move |i| trees[i].clone())
}

/// Three trees on disjoint letters.
fn three_trees() -> impl Strategy<Value = (DiTree, DiTree, DiTree)> {
    (perm(6), 1usize..5, 1usize..2).prop_flat_map(|(p, i, j)| {
        let w = p.images().to_vec();
        let (k, l) = (i, (i + j).min(5));
        (
            tree_on(w[..k].to_vec()),
            tree_on(w[k..l].to_vec()),
            tree_on(w[l..].to_vec()),
        )
    })
}

fn check_laws<F: Field>(f: F, rows: &[Vec<i64>]) {
    let m = DenseMatrix::from_i64_rows(f.clone(), rows).unwrap();
    let r = rcf(&m);
    let again = rcf(&r.rcf);
    assert_eq!(again.rcf.row_vecs(), r.rcf.row_vecs());
    let null = nullspace_basis(&m);
    assert_eq!(r.rank + null.len(), m.cols());
    for v in &null {
        assert!(m.mul_vec(v).unwrap().iter().all(|x| f.is_zero(x)));
    }
    let a = Subspace::from_rows(f.clone(), m.cols(), m.row_vecs()).unwrap();
    let b = Subspace::from_rows(f, m.cols(), r.rcf.row_vecs()).unwrap();
    assert!(a.equals(&b).unwrap());
    assert_eq!(a.dim(), r.rank);
}

fn eval(t: &DiTree, left: &DiOpTemplate, right: &DiOpTemplate) -> DiPoly {
    match t {
        DiTree::Leaf(v) => DiPoly::monomial(DiMonomial::variable(*v)),
        DiTree::Node(op, a, b) => {
            let tpl = if *op == DiOp::Left { left } else { right };
            substitute_di(tpl, &[eval(a, left, right), eval(b, left, right)]).unwrap()
        }
    }
}

proptest! {
    #[test]
    fn action_laws(s in perm(5), t in perm(5), w in perm(5), c in 0usize..5) {
        let m = DiMonomial::new(w.images().to_vec(), c).unwrap();
        prop_assert_eq!(m.act(&Permutation::identity(5)), m.clone());
        prop_assert_eq!(m.act(&t).act(&s), m.act(&s.compose(&t)));
        prop_assert_eq!(m.act(&s).act(&s.inverse()), m);
    }

    #[test]
    fn basis_action_is_a_group_action(s in perm(5), t in perm(5), i in 0usize..1440) {
        let b = TreeBasis::full(&Signature::uniform(1, 3), 5).unwrap();
        let i = i % b.len();
        prop_assert_eq!(b.act(&s, b.act(&t, i).unwrap()).unwrap(), b.act(&s.compose(&t), i).unwrap());
    }

    #[test]
    fn linear_algebra_laws(rows in int_matrix()) {
        check_laws(PrimeField::new(101).unwrap(), &rows);
        check_laws(Rationals, &rows);
    }

    #[test]
    fn normal_form_respects_the_axioms((x, y, z) in three_trees()) {
        let (l, r) = (DiTree::left, DiTree::right);
        let c = |t: &DiTree| t.clone();
        let pairs = [
            (l(l(c(&x), c(&y)), c(&z)), l(c(&x), l(c(&y), c(&z)))),
            (l(l(c(&x), c(&y)), c(&z)), l(c(&x), r(c(&y), c(&z)))),
            (l(r(c(&x), c(&y)), c(&z)), r(c(&x), l(c(&y), c(&z)))),
            (r(l(c(&x), c(&y)), c(&z)), r(r(c(&x), c(&y)), c(&z))),
            (r(r(c(&x), c(&y)), c(&z)), r(c(&x), r(c(&y), c(&z)))),
        ];
        for (a, b) in &pairs {
            prop_assert_eq!(a.normal_form(), b.normal_form());
        }
        prop_assert_ne!(r(l(c(&x), c(&y)), c(&z)).normal_form(), l(c(&x), r(c(&y), c(&z))).normal_form());
    }

    #[test]
    fn substitution_matches_trees(w in perm(6), k in 0usize..100_000) {
        let trees = DiTree::all_on_word(w.images());
        let t = &trees[k % trees.len()];
        let left = DiOpTemplate::parse("^ab").unwrap();
        let right = DiOpTemplate::parse("a^b").unwrap();
        prop_assert!(eval(t, &left, &right) == DiPoly::monomial(t.normal_form()));
    }

    #[test]
    fn bso_lifts_erase_to_omega(
        n in 2usize..5,
        picks in prop::collection::vec((0usize..24, -3i64..4), 1..5),
    ) {
        let all = Permutation::all(n);
        let mut poly = dialgebra::poly::MultiPoly::<Permutation>::zero();
        for (i, c) in picks {
            poly.add_term(all[i % all.len()].clone(), Coeff::from_integer(c));
        }
        prop_assume!(!poly.is_zero());
        let omega = GroupAlgebraOp { arity: n, terms: poly.iter().map(|(p, c)| (p.clone(), *c)).collect() };
        let ops = bso(&omega);
        prop_assert_eq!(ops.len(), n);
        for (i, op) in ops.iter().enumerate() {
            prop_assert!(op.terms.iter().all(|(p, hat, _)| p.apply(*hat) == i));
            prop_assert!(erase_centers(&op.as_poly()) == omega.as_poly());
        }
    }

    #[test]
    fn kp_outputs_erase_to_input(picks in prop::collection::vec((0usize..1440, -3i64..4), 1..5)) {
        let b = TreeBasis::full(&Signature::uniform(1, 3), 5).unwrap();
        let f = Rationals;
        let mut v = vec![f.zero(); b.len()];
        for (i, c) in picks {
            v[i % b.len()] = f.add(&v[i % b.len()], &f.from_i64(c));
        }
        let id = b.poly_of(&f, &v);
        prop_assume!(!id.is_zero());
        let outs = kp_part1(&id, 3).unwrap();
        prop_assert_eq!(outs.len(), 5);
        for p in &outs {
            prop_assert!(erase_subscripts(p) == id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn identities_are_closed_under_permutation(s in perm(5)) {
        let f = PrimeField::new(101).unwrap();
        let b = diproduct1_basis().unwrap();
        let e = DiExpander { ops: vec![DiOpTemplate::parse("^abc + cb^a").unwrap()] };
        let ids = find_identities(&f, &b, &e).unwrap();
        let space = Subspace::from_rows(f, b.len(), ids.identities.clone()).unwrap();
        let table = b.action_table(&s).unwrap();
        for v in &ids.identities {
            prop_assert!(space.contains(&b.permute_vector(&f, &table, v)).unwrap());
        }
    }
}
