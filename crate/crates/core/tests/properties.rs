mod common;

use std::collections::BTreeSet;

use common::*;
use keypoly::diagram::lower_subsets;
use keypoly::*;
use num_traits::One;
use proptest::prelude::*;

fn polynomial_strategy(n: usize, max_degree: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..n, 0..=max_degree), -9i64..=9);
    prop::collection::vec(term, 0..8).prop_map(move |terms| {
        let pairs = terms.into_iter().map(|(units, c)| {
            let mut exp = vec![0u32; n];
            for u in units {
                exp[u] += 1;
            }
            (Composition::new(exp), BigInt::from(c))
        });
        Polynomial::from_terms(n, pairs).unwrap()
    })
}

fn diagram_strategy(n: usize) -> impl Strategy<Value = Diagram> {
    prop::collection::vec(prop::collection::btree_set(1..=n as u32, 0..=n), n)
        .prop_map(move |cols| Diagram::new(n, cols.into_iter().map(|c| c.into_iter().collect()).collect()).unwrap())
}

fn x_minus_next(n: usize, i: usize) -> Polynomial {
    let mut a = vec![0; n];
    a[i - 1] = 1;
    let mut b = vec![0; n];
    b[i] = 1;
    Polynomial::from_terms(n, [(Composition::new(a), BigInt::one()), (Composition::new(b), -BigInt::one())]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divided_difference_matches_closed_form(f in polynomial_strategy(4, 6), i in 1usize..=3) {
        let d = f.divided_difference(i).unwrap();
        prop_assert_eq!(as_map(&d), divided_difference_by_formula(&f, i));
    }

    #[test]
    fn divided_difference_inverts_the_difference(f in polynomial_strategy(4, 5), i in 1usize..=3) {
        // (x_i - x_{i+1}) ∂_i f = f - s_i f
        let lhs = &x_minus_next(4, i) * &f.divided_difference(i).unwrap();
        let rhs = &f - &f.swap_variables(i).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_is_idempotent(f in polynomial_strategy(4, 5), i in 1usize..=3) {
        let once = f.demazure(i).unwrap();
        prop_assert_eq!(once.demazure(i).unwrap(), once);
    }

    #[test]
    fn demazure_braid_relation(f in polynomial_strategy(4, 5), i in 1usize..=2) {
        let lhs = f.demazure_word(&[i, i + 1, i]).unwrap();
        let rhs = f.demazure_word(&[i + 1, i, i + 1]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn demazure_far_operators_commute(f in polynomial_strategy(4, 5)) {
        prop_assert_eq!(f.demazure_word(&[1, 3]).unwrap(), f.demazure_word(&[3, 1]).unwrap());
    }

    #[test]
    fn demazure_image_is_symmetric_and_fixed(f in polynomial_strategy(4, 5), i in 1usize..=3) {
        let image = f.demazure(i).unwrap();
        prop_assert_eq!(image.swap_variables(i).unwrap(), image.clone());
        let sym = &f + &f.swap_variables(i).unwrap();
        prop_assert_eq!(sym.demazure(i).unwrap(), sym);
    }

    #[test]
    fn diagram_order_is_a_partial_order(a in diagram_strategy(3), b in diagram_strategy(3), c in diagram_strategy(3)) {
        prop_assert!(diagram_leq(&a, &a).unwrap());
        if diagram_leq(&a, &b).unwrap() && diagram_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if diagram_leq(&a, &b).unwrap() && diagram_leq(&b, &c).unwrap() {
            prop_assert!(diagram_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn lower_diagrams_are_below(d in diagram_strategy(3)) {
        for c in enumerate_lower_diagrams(&d) {
            prop_assert!(diagram_leq(&c, &d).unwrap());
        }
    }

    #[test]
    fn sorted_columns_land_in_sorted_family(d in diagram_strategy(3), pick in any::<prop::sample::Index>()) {
        let all: Vec<Filling> = enumerate_fillings(&d).collect();
        let f = &all[pick.index(all.len())];
        let s = f.sorted_columns();
        prop_assert!(s.is_sorted_valid());
        prop_assert!(enumerate_sorted_fillings(&d).any(|g| g == s));
        prop_assert_eq!(weight(&s), weight(f));
    }

    #[test]
    fn chains_replay(alpha in prop::collection::vec(0u32..=4, 1..=4)) {
        let alpha = Composition::new(alpha);
        let reach = closure_by_dfs(alpha.parts());
        for beta in &reach {
            let beta = Composition::new(beta.clone());
            let chain = leq_kappa(&beta, &alpha).unwrap().expect("reachable by the hand-written moves");
            prop_assert_eq!(&chain.start, &alpha);
            let mut v = alpha.clone();
            for mv in &chain.moves {
                prop_assert!(mv.is_legal_on(&v));
                v = apply_move(&v, *mv).unwrap();
            }
            prop_assert_eq!(v, beta);
        }
    }

    #[test]
    fn hull_membership_matches_caratheodory(
        gens in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=6),
        num in prop::collection::vec(0i64..=9, 3),
        den in 1i64..=3,
    ) {
        let polytope = VPolytope::new(3, gens.iter().cloned().map(Composition::new)).unwrap();
        let p: Vec<BigRational> = num.iter().map(|&v| rational(v, den)).collect();
        prop_assert_eq!(polytope.contains(&RationalVector(p.clone())).unwrap(), hull_contains_by_caratheodory(&gens, &p));
    }

    #[test]
    fn lattice_points_match_caratheodory(gens in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=5)) {
        let polytope = VPolytope::new(3, gens.iter().cloned().map(Composition::new)).unwrap();
        let fast: BTreeSet<Vec<u32>> = polytope.lattice_points().into_iter().map(Composition::into_parts).collect();
        prop_assert_eq!(fast, lattice_points_by_caratheodory(&gens));
    }

    #[test]
    fn float_and_exact_membership_agree_on_lattice_points(
        gens in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=5),
        pt in prop::collection::vec(0u32..=3, 3),
    ) {
        let polytope = VPolytope::new(3, gens.into_iter().map(Composition::new)).unwrap();
        let exact = polytope.contains_lattice_point(&Composition::new(pt.clone())).unwrap();
        let float: Vec<f64> = pt.iter().map(|&v| f64::from(v)).collect();
        prop_assert_eq!(polytope.contains_point(&float).unwrap(), exact);
    }
}

#[test]
fn pivot_choice_is_irrelevant() {
    for alpha in family(4, 4) {
        let left: SmallPolynomial = key_polynomial_with(&alpha, Pivot::Leftmost);
        let right: SmallPolynomial = key_polynomial_with(&alpha, Pivot::Rightmost);
        assert_eq!(left, right, "{alpha:?}");
        let cached = key_polynomial(&alpha).map_coefficients(|c| i64::try_from(c.clone()).unwrap());
        assert_eq!(cached, left, "{alpha:?}");
    }
}

#[test]
fn leading_coefficient_and_support() {
    for alpha in family(4, 4) {
        let k = key_polynomial(&alpha);
        assert_eq!(k.coefficient(&alpha), BigInt::one(), "{alpha:?}");
        assert!(k.terms().all(|(_, c)| *c > BigInt::from(0)), "{alpha:?} has a nonpositive coefficient");
        assert!(k.terms().all(|(e, _)| e.size() == alpha.size()), "{alpha:?} is not homogeneous");
        // Every move raises lex order, so α is the lex-smallest exponent.
        assert_eq!(k.exponent_vectors().first(), Some(&alpha));
    }
}

#[test]
fn increasing_compositions_give_symmetric_polynomials() {
    for alpha in family(4, 3).into_iter().filter(Composition::is_weakly_increasing) {
        let k = key_polynomial(&alpha);
        for i in 1..alpha.len() {
            assert_eq!(k.swap_variables(i).unwrap(), *k, "{alpha:?} not symmetric in x_{i}, x_{}", i + 1);
        }
    }
}

#[test]
fn closure_matches_hand_written_moves() {
    for alpha in family(4, 4) {
        let expected: BTreeSet<Composition> = closure_by_dfs(alpha.parts()).into_iter().map(Composition::new).collect();
        assert_eq!(closure(&alpha), expected, "{alpha:?}");
    }
}

#[test]
fn order_is_closure_inclusion() {
    let fam = family(3, 3);
    for alpha in &fam {
        let up = closure(alpha);
        for beta in fam.iter().filter(|b| b.len() == alpha.len()) {
            let included = closure(beta).is_subset(&up);
            assert_eq!(leq_kappa(beta, alpha).unwrap().is_some(), included, "{beta:?} vs {alpha:?}");
            assert_eq!(up.contains(beta), included, "{beta:?} vs {alpha:?}");
        }
    }
}

#[test]
fn optimize_preserves_weight_and_validity() {
    for alpha in family(3, 3) {
        let d = Diagram::skyline(&pad(&alpha)).unwrap();
        for f in enumerate_fillings(&d) {
            let g = optimize(&f);
            assert!(g.is_valid(), "{f:?}");
            assert_eq!(weight(&g), weight(&f), "{f:?}");
            assert_eq!(optimize(&g), g, "optimization is not idempotent on {f:?}");
            // Every value i that is also a row of its column sits in row i.
            for (row, col, val) in g.entries() {
                if d.contains(val, col) {
                    assert_eq!(g.entry(val, col), Some(val), "({row},{col}) in {g:?}");
                }
            }
        }
    }
}

#[test]
fn sorted_fillings_biject_with_lower_sets() {
    for alpha in family(3, 3) {
        let d = Diagram::skyline(&pad(&alpha)).unwrap();
        let expected: usize = d.columns().iter().map(|c| lower_subsets(c, d.n()).len()).product();
        let by_filter = enumerate_fillings(&d).filter(Filling::is_sorted_valid).count();
        assert_eq!(enumerate_sorted_fillings(&d).count(), expected, "{alpha:?}");
        assert_eq!(by_filter, expected, "{alpha:?}");
    }
}

#[test]
fn json_round_trips() {
    for alpha in family(3, 3) {
        let k = key_polynomial(&alpha);
        let back: Polynomial = serde_json::from_str(&serde_json::to_string(&*k).unwrap()).unwrap();
        assert_eq!(back, *k);
        let d = Diagram::skyline(&pad(&alpha)).unwrap();
        let back: Diagram = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        for f in enumerate_fillings(&d).take(5) {
            let back: Filling = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
            assert_eq!(back, f);
        }
        for beta in closure(&alpha) {
            let chain = leq_kappa(&beta, &alpha).unwrap().unwrap();
            let back: MoveChain = serde_json::from_str(&serde_json::to_string(&chain).unwrap()).unwrap();
            assert_eq!(back, chain);
        }
    }
}

#[test]
#[ignore = "sweeps S_5; run with --ignored"]
fn interval_polytopes_over_s5() {
    for w in Permutation::all(5) {
        assert!(verify_qww0(&w).unwrap(), "{w:?}");
        let q = interval_polytope(&w, &Permutation::longest(5)).unwrap();
        assert_eq!(q.lattice_points(), closure(&w.as_composition()), "{w:?}");
    }
}
