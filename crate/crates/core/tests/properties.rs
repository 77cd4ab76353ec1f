use gcinterp::generators::{random_berzolari_radon, Affine};
use gcinterp::geometry::{collinear, int, rat, Line, NodeSet, Point, Scalar};
use gcinterp::interpolation::{
    fundamental_polynomials, interpolate, is_poised, InterpolationProblem,
};
use gcinterp::poly::{dimension, monomial_values, Poly2};
use gcinterp::rng::SplitMix64;
use num_traits::Zero;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (scalar(), scalar()).prop_map(|(x, y)| Point::new(x, y))
}

fn line() -> impl Strategy<Value = Line> {
    (-6i64..=6, -6i64..=6, -8i64..=8)
        .prop_filter("not degenerate", |(a, b, _)| *a != 0 || *b != 0)
        .prop_map(|(a, b, c)| Line::new(a, b, c).unwrap())
}

fn poly(bound: usize) -> impl Strategy<Value = Poly2> {
    prop::collection::vec(scalar(), dimension(bound))
        .prop_map(move |c| Poly2::from_coeffs(bound, c))
}

fn sized_poly(max_bound: usize) -> impl Strategy<Value = Poly2> {
    (0..=max_bound).prop_flat_map(poly)
}

fn poised_set() -> impl Strategy<Value = NodeSet> {
    (1usize..=4, any::<u64>())
        .prop_map(|(n, seed)| random_berzolari_radon(&mut SplitMix64::new(seed), n, 6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_idempotent_and_scale_free(l in line(), k in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let (a, b, c) = l.scalars();
        prop_assert_eq!(Line::from_scalars(&a, &b, &c).unwrap(), l.clone());
        let f = int(k);
        prop_assert_eq!(Line::from_scalars(&(&a * &f), &(&b * &f), &(&c * &f)).unwrap(), l);
    }

    #[test]
    fn line_through_is_symmetric(p in point(), q in point()) {
        prop_assume!(p != q);
        let l = Line::through(&p, &q).unwrap();
        prop_assert_eq!(&l, &Line::through(&q, &p).unwrap());
        prop_assert!(l.contains(&p) && l.contains(&q));
    }

    #[test]
    fn incidence_matches_collinearity(p in point(), q in point(), r in point()) {
        prop_assume!(p != q);
        prop_assert_eq!(Line::through(&p, &q).unwrap().contains(&r), collinear(&p, &q, &r));
    }

    #[test]
    fn division_inverts_multiplication(q in sized_poly(4), l in line()) {
        let product = q.times_line(&l);
        prop_assert!(product.divisible_by(&l));
        prop_assert_eq!(product.divide_by_line(&l).unwrap(), q);
    }

    #[test]
    fn divisibility_matches_vanishing_on_the_line(
        n in 1usize..=4,
        seed in any::<u64>(),
        make_divisible in any::<bool>(),
        l in line(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let random = |bound: usize, rng: &mut SplitMix64| {
            Poly2::from_coeffs(bound, (0..dimension(bound)).map(|_| rng.rational(5)).collect())
        };
        let p = if make_divisible {
            random(n - 1, &mut rng).times_line(&l)
        } else {
            random(n, &mut rng)
        };
        let vanishes = (0..=n as i64).all(|t| p.evaluate(&l.point_at(&int(t))).is_zero());
        prop_assert_eq!(p.divisible_by(&l), vanishes);
        prop_assert_eq!(p.divide_by_line(&l).is_some(), vanishes);
        if make_divisible {
            prop_assert!(vanishes);
        }
    }

    #[test]
    fn evaluation_is_the_monomial_dot_product(p in sized_poly(5), x in point()) {
        let dot = monomial_values(p.bound(), &x)
            .iter()
            .zip(p.coeffs())
            .fold(Scalar::zero(), |acc, (m, c)| acc + m * c);
        prop_assert_eq!(p.evaluate(&x), dot);
    }

    #[test]
    fn restriction_of_a_multiple_vanishes(q in sized_poly(3), l in line()) {
        prop_assert!(q.times_line(&l).restrict_to_line(&l).is_zero());
    }

    #[test]
    fn multiplication_respects_the_bound(q in poly(3), l in line()) {
        prop_assume!(q.effective_degree() == Some(3));
        prop_assert!(q.multiply_linear(&l, 3).is_err());
        prop_assert!(q.multiply_linear(&l, 4).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fundamentals_form_a_partition_of_unity(nodes in poised_set()) {
        let fundamentals = fundamental_polynomials(&nodes).unwrap();
        let n = nodes.degree();
        let sum = fundamentals.iter().fold(Poly2::zero(n), |acc, f| &acc + &f.poly);
        prop_assert_eq!(sum, Poly2::constant(n, int(1)));
        for f in &fundamentals {
            for (k, x) in nodes.nodes().iter().enumerate() {
                let expected = if k == f.owner { int(1) } else { int(0) };
                prop_assert_eq!(f.poly.evaluate(x), expected);
            }
        }
    }

    #[test]
    fn interpolation_reproduces_polynomials(nodes in poised_set(), seed in any::<u64>()) {
        let n = nodes.degree();
        let mut rng = SplitMix64::new(seed);
        let p = Poly2::from_coeffs(n, (0..dimension(n)).map(|_| rng.rational(9)).collect());
        let data = nodes.nodes().iter().map(|x| p.evaluate(x)).collect();
        let problem = InterpolationProblem::new(nodes, data).unwrap();
        prop_assert_eq!(interpolate(&problem).unwrap(), p);
    }

    #[test]
    fn poisedness_is_affine_invariant(
        n in 1usize..=3,
        seed in any::<u64>(),
        points in prop::collection::vec((-2i64..=2, -2i64..=2), 10),
    ) {
        let mut rng = SplitMix64::new(seed);
        let mut distinct: Vec<Point> = Vec::new();
        for (x, y) in points {
            let p = Point::from_ints(x, y);
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
        prop_assume!(distinct.len() >= dimension(n));
        distinct.truncate(dimension(n));
        let nodes = NodeSet::new(distinct, n).unwrap();
        let image = Affine::random(&mut rng, 5).apply_nodes(&nodes);
        prop_assert_eq!(is_poised(&nodes).unwrap(), is_poised(&image).unwrap());
    }
}
