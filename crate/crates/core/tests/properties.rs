mod common;

use common::*;
use hjj_core::algebra::{
    central_extension, check_hom_ideal, current_algebra, d_extension, hom_annihilator, hom_jacobian,
    tensor_hom_algebra, verify_algebra, BilinearMap,
};
use hjj_core::cohomology::{adjoint_cohomology, cohomology, CochainComplex};
use hjj_core::deformation::{
    equivalence_check, formal_deformation_check, linear_mult_deformation_check, FormalMapSeries,
    FormalProductSeries,
};
use hjj_core::derivation::{
    bracket_classify, coords_to_map, derivation_space, inner_antiderivation_space, map_to_coords,
};
use hjj_core::exactlin::{nullspace, quotient_basis, rank, Subspace};
use hjj_core::representation::{adjoint_rep, direct_sum_rep, trivial_rep, verify_representation};
use hjj_core::rotabaxter::{
    conjugate_rb, induced_algebra, induced_linear_deformation, induced_rep,
    linear_deformation_generator_check, nijenhuis_check, verify_rb, RBMorphism,
};
use hjj_core::{Matrix, Scalar};
use proptest::prelude::*;
use rand::Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn rank_nullity(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
        let mut r = rng(seed);
        let m = random_matrix(&mut r, rows, cols);
        prop_assert_eq!(rank(&m) + nullspace(&m).dim(), cols);
    }

    #[test]
    fn quotient_basis_completes_b(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..5usize);
        let zvecs: Vec<_> = (0..r.gen_range(0..=n)).map(|_| random_vector(&mut r, n)).collect();
        let z = Subspace::span(&zvecs, n);
        let b = Subspace::span(&(0..2).map(|_| random_member(&mut r, &z)).collect::<Vec<_>>(), n);
        let q = quotient_basis(&z, &b).unwrap();
        let mut all = b.basis_vectors();
        all.extend(q.iter().cloned());
        prop_assert_eq!(all.len(), z.dim());
        prop_assert_eq!(Subspace::span(&all, n), z);
    }

    #[test]
    fn scalar_prints_lowest_terms(p in -1000i64..1000, q in 1i64..1000) {
        let s = Scalar::ratio(p, q);
        let g = num_gcd(p.abs(), q);
        let expected = if q / g == 1 { format!("{}", p / g) } else { format!("{}/{}", p / g, q / g) };
        prop_assert_eq!(s.to_string(), expected.clone());
        let parsed: Scalar = format!("{p}/{q}").parse().unwrap();
        prop_assert_eq!(parsed.to_string(), expected);
    }

    #[test]
    fn hom_jacobian_vanishes_and_is_cyclic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        prop_assert!(verify_algebra(&a).all_hold());
        let n = a.dim();
        let (x, y, z) = (random_vector(&mut r, n), random_vector(&mut r, n), random_vector(&mut r, n));
        let j = hom_jacobian(&a, &x, &y, &z).unwrap();
        prop_assert!(j.iter().all(Scalar::is_zero));
        let raw = random_raw_algebra(&mut r);
        let m = raw.dim();
        let (x, y, z) = (random_vector(&mut r, m), random_vector(&mut r, m), random_vector(&mut r, m));
        let j1 = hom_jacobian(&raw, &x, &y, &z).unwrap();
        prop_assert_eq!(&j1, &hom_jacobian(&raw, &y, &z, &x).unwrap());
        prop_assert_eq!(&j1, &hom_jacobian(&raw, &z, &x, &y).unwrap());
    }

    #[test]
    fn annihilator_is_hom_ideal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = if r.gen_bool(0.5) { random_hjj(&mut r, false) } else { random_raw_algebra(&mut r) };
        prop_assert!(check_hom_ideal(&a, &hom_annihilator(&a)));
    }

    #[test]
    fn current_and_tensor_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_hjj(&mut r, false);
        let c = current_algebra(&l, &random_assoc(&mut r)).unwrap();
        prop_assert!(verify_algebra(&c).all_hold());
        let t = tensor_hom_algebra(&l, &random_hom_assoc(&mut r)).unwrap();
        prop_assert!(verify_algebra(&t).all_hold());
    }

    #[test]
    fn central_extension_iff(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = if r.gen_bool(0.8) { random_hjj(&mut r, false) } else { random_raw_algebra(&mut r) };
        let theta = random_theta(&mut r, &a);
        let e = central_extension(&a, &theta).unwrap();
        prop_assert_eq!(e.valid, verify_algebra(&e.algebra).all_hold());
    }

    #[test]
    fn d_extension_iff(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = if r.gen_bool(0.8) { random_hjj(&mut r, false) } else { random_raw_algebra(&mut r) };
        let d = random_d(&mut r, &a);
        let e = d_extension(&a, &d).unwrap();
        prop_assert_eq!(e.valid, verify_algebra(&e.algebra).all_hold());
    }

    #[test]
    fn adjoint_and_sums_are_representations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        for s in 0..=2 {
            prop_assert!(verify_representation(&adjoint_rep(&a, s).unwrap()).all_hold());
        }
        if a.is_regular() {
            prop_assert!(verify_representation(&adjoint_rep(&a, -1).unwrap()).all_hold());
        }
        let sum = direct_sum_rep(&adjoint_rep(&a, 1).unwrap(), &trivial_rep(&a)).unwrap();
        prop_assert!(verify_representation(&sum).all_hold());
    }

    #[test]
    fn degree_one_identifications(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let s = r.gen_range(0..=2);
        for rep in [adjoint_rep(&a, s).unwrap(), trivial_rep(&a)] {
            let cx = CochainComplex::new(&rep);
            prop_assert_eq!(cx.cocycles(1).unwrap(), derivation_space(&rep, 1, true).unwrap());
            prop_assert_eq!(cx.coboundaries(1).unwrap(), inner_antiderivation_space(&rep, 0));
        }
    }

    #[test]
    fn bracket_relations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let n = a.dim();
        let (k1, k2) = (r.gen_range(0..=2), r.gen_range(0..=2));
        let (anti1, anti2) = (r.gen_bool(0.5), r.gen_bool(0.5));
        let s1 = hjj_core::derivation::algebra_derivation_space(&a, k1, anti1).unwrap();
        let s2 = hjj_core::derivation::algebra_derivation_space(&a, k2, anti2).unwrap();
        let d1 = coords_to_map(&random_member(&mut r, &s1), n, n);
        let d2 = coords_to_map(&random_member(&mut r, &s2), n, n);
        let b = bracket_classify(&a, &d1, k1, anti1, &d2, k2, anti2).unwrap();
        prop_assert!(b.commutator_inclusion_holds);
        if anti1 == anti2 {
            prop_assert_eq!(b.anticommutator_in_ader, b.cantider);
            prop_assert_eq!(b.anticommutator_in_der, b.cder);
        } else {
            prop_assert_eq!(b.anticommutator_in_ader, b.cder);
        }
    }

    #[test]
    fn h0_is_annihilator_and_adjoint_entry_point(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let h = adjoint_cohomology(&a, 0, 0).unwrap();
        prop_assert_eq!(Subspace::span(&h.z, a.dim()), hom_annihilator(&a));
        let s = r.gen_range(0..=2);
        let n = r.gen_range(0..=2);
        prop_assert_eq!(adjoint_cohomology(&a, s, n).unwrap(), cohomology(&adjoint_rep(&a, s).unwrap(), n).unwrap());
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn equivariance_and_zigzag(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let rep = match r.gen_range(0..3) {
            0 => trivial_rep(&a),
            k => adjoint_rep(&a, k).unwrap(),
        };
        let cx = CochainComplex::new(&rep);
        for n in 0..=2 {
            prop_assert!(cx.equivariance_holds(n).unwrap());
        }
        let top = if a.dim() == 3 { 2 } else { 3 };
        for n in 1..=top {
            prop_assert!(cx.zigzag_holds(n).unwrap());
        }
    }

    #[test]
    fn induced_structures_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let rep = if r.gen_bool(0.5) { adjoint_rep(&a, r.gen_range(0..=1)).unwrap() } else { trivial_rep(&a) };
        let op = random_rb(&mut r, &rep, 20).expect("the zero operator is always reachable");
        prop_assert!(verify_algebra(&induced_algebra(&op).unwrap()).all_hold());
        prop_assert!(verify_representation(&induced_rep(&op).unwrap()).all_hold());
    }

    #[test]
    fn generator_routes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, false);
        let rep = adjoint_rep(&a, 0).unwrap();
        let op = random_rb(&mut r, &rep, 20).unwrap();
        let z = if r.gen_bool(0.5) {
            random_matrix(&mut r, a.dim(), a.dim())
        } else {
            random_rb(&mut r, &rep, 20).unwrap().matrix().clone()
        };
        let g = linear_deformation_generator_check(&op, &z).unwrap();
        prop_assert!(g.routes_agree);
        if g.generator {
            let psi = induced_linear_deformation(&op, &z).unwrap();
            let base = induced_algebra(&op).unwrap();
            if base.is_regular() {
                prop_assert!(linear_mult_deformation_check(&base, &psi).unwrap().generator);
            }
        }
    }

    #[test]
    fn nijenhuis_bridges(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, true);
        let n = random_commuting(&mut r, &a);
        let report = nijenhuis_check(&a, &n).unwrap();
        prop_assume!(report.is_nijenhuis);
        prop_assert_eq!(report.matches_delta, Some(true));
        let psi = report.deformed_product.unwrap();
        let s1 = FormalProductSeries::with_higher(a.clone(), vec![psi]).unwrap();
        prop_assert!(formal_deformation_check(&s1).unwrap().passes);
        let s2 = FormalProductSeries::with_higher(a.clone(), vec![BilinearMap::zero(a.dim(), a.dim())]).unwrap();
        let e = equivalence_check(&s1, &s2, &FormalMapSeries::identity_plus(&n)).unwrap();
        prop_assert!(e.equivalent);
        prop_assert_eq!(e.trivial_system_agrees, Some(true));
    }

    #[test]
    fn conjugation_preserves_rb(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, true);
        let rep = adjoint_rep(&a, 0).unwrap();
        let op = random_rb(&mut r, &rep, 20).unwrap();
        let j = r.gen_range(0..=2u32);
        let lambda = Scalar::from_int(r.gen_range(1..=3));
        let m = RBMorphism {
            phi_a: a.alpha().pow(j),
            phi_v: a.alpha().pow(j).scale(&lambda),
        };
        let t2 = conjugate_rb(&op, &m).unwrap();
        prop_assert!(verify_rb(&t2).all_hold());
    }

    #[test]
    fn order_one_bridge_and_scaling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, true);
        let n = a.dim();
        prop_assert!(formal_deformation_check(&FormalProductSeries::constant(a.clone(), 3)).unwrap().passes);
        let mu1 = if r.gen_bool(0.5) {
            let rep = adjoint_rep(&a, -1).unwrap();
            let cx = CochainComplex::new(&rep);
            let space = cx.symmetric(2).unwrap().intersect(&cx.cocycles(2).unwrap());
            BilinearMap::from_cochain(&random_member(&mut r, &space), n, n)
        } else {
            random_theta_like(&mut r, n)
        };
        let s = FormalProductSeries::with_higher(a.clone(), vec![mu1.clone()]).unwrap();
        let rep = formal_deformation_check(&s).unwrap();
        if rep.per_order[1] {
            prop_assert_eq!(rep.order_one_cocycle, Some(true));
        }
        let lin = linear_mult_deformation_check(&a, &mu1).unwrap();
        prop_assert_eq!(lin.bridge_holds, Some(true));
        prop_assert_eq!(lin.generator, lin.defor4a && lin.defor4b && lin.defor5 && lin.defor6);
    }

    #[test]
    fn equivalence_implies_cohomologous(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_hjj(&mut r, true);
        let n = a.dim();
        let mu1 = random_theta_like(&mut r, n);
        let phi1 = random_commuting(&mut r, &a);
        let rep = adjoint_rep(&a, -1).unwrap();
        let delta = CochainComplex::new(&rep).apply_delta(1, &map_to_coords(&phi1)).unwrap();
        let mu1p = mu1.sub(&BilinearMap::from_cochain(&delta, n, n));
        let s1 = FormalProductSeries::with_higher(a.clone(), vec![mu1]).unwrap();
        let s2 = FormalProductSeries::with_higher(a.clone(), vec![mu1p]).unwrap();
        let phi = FormalMapSeries::new(vec![Matrix::identity(n), phi1]).unwrap();
        let e = equivalence_check(&s1, &s2, &phi).unwrap();
        prop_assert!(e.per_order[0] && e.per_order[1]);
        prop_assert_eq!(e.order_one_delta, Some(true));
        prop_assert_eq!(e.cohomologous, Some(true));
    }
}

/// Random symmetric bilinear map `A × A → A` with entries in {-1, 0, 1}.
fn random_theta_like(r: &mut impl Rng, n: usize) -> BilinearMap {
    let mut m = BilinearMap::zero(n, n);
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let c = int(r, -1, 1);
                m.set(i, j, k, c.clone());
                m.set(j, i, k, c);
            }
        }
    }
    m
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.max(1)
    } else {
        num_gcd(b, a % b)
    }
}
