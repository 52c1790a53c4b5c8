use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polarbox::arith::int;
use polarbox::conversion::{
    brute_force_rays, count_cone_bases, dd_extreme_rays, dd_extreme_rays_with_stats,
    facet_enumeration_direct, facet_enumeration_lifted, homogenize, member_certificate,
    polar_is_pointed, remove_redundancy_h, remove_redundancy_v, vertex_enumeration,
};
use polarbox::instances::{
    random_full_dim_hrep, random_pointed_cone, random_pointed_vrep, OriginPlacement,
};
use polarbox::polarity::{
    bipolar_vrep, is_bounded, is_hv_symmetric, origin_interior_to_polar, polar_vrep,
    verify_theorem1,
};
use polarbox::repr::{emit_rep, parse_rep};
use polarbox::{Rep, VRep};

fn vrep(seed: u64) -> VRep {
    random_pointed_vrep(&mut ChaCha8Rng::seed_from_u64(seed), OriginPlacement::Any)
}

fn contains_origin(v: &VRep) -> bool {
    member_certificate(v, &vec![int(0); v.dim()]).unwrap().is_some()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dd_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = rng.random_range(2..=4);
        let m = rng.random_range(d..=d + 5);
        let a = random_pointed_cone(&mut rng, d, m, 5000).unwrap();
        prop_assert_eq!(dd_extreme_rays(&a).unwrap(), brute_force_rays(&a, 5000).unwrap());
    }

    #[test]
    fn every_ray_is_tight_on_enough_rows(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_pointed_cone(&mut rng, 4, 8, 5000).unwrap();
        let (rays, stats) = dd_extreme_rays_with_stats(&a).unwrap();
        prop_assert!(stats.max_intermediate_rays >= 4);
        let bases = count_cone_bases(&a, 5000).unwrap();
        prop_assert!(bases as usize >= rays.len());
    }

    #[test]
    fn h_v_h_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=3);
        let h = random_full_dim_hrep(&mut rng, n, n + 3);
        let (v, _) = vertex_enumeration(&h).unwrap();
        prop_assert_eq!(facet_enumeration_lifted(&v).unwrap().0, remove_redundancy_h(&h).unwrap());
    }

    #[test]
    fn v_h_v_round_trip(seed in any::<u64>()) {
        let v = vrep(seed);
        let (h, _) = facet_enumeration_lifted(&v).unwrap();
        prop_assert_eq!(vertex_enumeration(&h).unwrap().0, remove_redundancy_v(&v));
    }

    #[test]
    fn direct_and_lifted_agree(seed in any::<u64>()) {
        let v = random_pointed_vrep(&mut ChaCha8Rng::seed_from_u64(seed), OriginPlacement::Inside);
        prop_assert_eq!(facet_enumeration_direct(&v).unwrap().0, facet_enumeration_lifted(&v).unwrap().0);
    }

    #[test]
    fn theorem1_statements_agree(seed in any::<u64>()) {
        let v = vrep(seed);
        let check = verify_theorem1(&v).unwrap();
        prop_assert!(check.all_equal());
        prop_assert_eq!(check.origin_in_p, contains_origin(&v));
        prop_assert_eq!(is_hv_symmetric(&v).unwrap().symmetric, check.origin_in_p);
    }

    #[test]
    fn bipolar_is_idempotent(seed in any::<u64>()) {
        let v = vrep(seed);
        let b = bipolar_vrep(&v);
        prop_assert_eq!(bipolar_vrep(&b), b.clone());
        prop_assert!(contains_origin(&b));
    }

    #[test]
    fn double_polar_is_the_bipolar(seed in any::<u64>()) {
        let v = vrep(seed);
        let q = polar_vrep(&v).unwrap();
        if polar_is_pointed(&q) {
            prop_assert_eq!(polar_vrep(&q).unwrap(), bipolar_vrep(&v));
        }
    }

    #[test]
    fn bounded_iff_origin_interior_to_polar(seed in any::<u64>()) {
        let v = vrep(seed);
        prop_assert_eq!(is_bounded(&v), origin_interior_to_polar(&v).unwrap());
    }

    #[test]
    fn vertex_enumeration_is_order_independent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_full_dim_hrep(&mut rng, 3, 6);
        let mut rows: Vec<Vec<_>> = h.rows().to_rows();
        rows.reverse();
        let shuffled = polarbox::HRep::inequalities(
            polarbox::RMatrix::from_rows(4, rows).unwrap()
        ).unwrap();
        prop_assert_eq!(vertex_enumeration(&h).unwrap().0, vertex_enumeration(&shuffled).unwrap().0);
    }

    #[test]
    fn emitted_files_reparse(seed in any::<u64>()) {
        let v = vrep(seed);
        let (h, _) = facet_enumeration_lifted(&v).unwrap();
        for rep in [Rep::V(remove_redundancy_v(&v)), Rep::H(h)] {
            prop_assert_eq!(parse_rep(&emit_rep(&rep)).unwrap(), rep);
        }
    }

    #[test]
    fn homogenized_rays_are_the_generators(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_full_dim_hrep(&mut rng, 2, 5);
        let rays = brute_force_rays(&homogenize(&h), 5000).unwrap();
        let (v, _) = vertex_enumeration(&h).unwrap();
        prop_assert_eq!(rays.len(), v.num_rows());
    }
}
