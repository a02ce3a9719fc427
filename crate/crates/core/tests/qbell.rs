use num_bigint::BigInt;
use proptest::prelude::*;

use dyckflip::partition::{binomial, compositions};
use dyckflip::path::enumerate_paths;
use dyckflip::qbell::{
    af_bf_union, bell_poly, bell_polys, distinct_ab_count, fqt, g_argmax, g_value, gqt,
    q_binomial, UnivariatePolynomial,
};

fn bell_recursive(n: usize) -> Vec<u128> {
    let mut b = vec![1u128];
    for m in 1..=n {
        b.push((0..m).map(|k| binomial(m - 1, k) * b[k]).sum());
    }
    b
}

#[test]
fn bell_at_one_matches_classical_recursion() {
    let classical = bell_recursive(15);
    for (n, p) in bell_polys(15).iter().enumerate() {
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(classical[n]), "n = {n}");
    }
    assert_eq!(bell_poly(3).to_string(), "4 + q");
}

#[test]
fn bell_coefficients_are_gap_free() {
    for (n, p) in bell_polys(20).iter().enumerate() {
        assert_eq!(p.degree(), Some(g_value(n)), "n = {n}");
        assert_eq!(p.nonzero_count(), g_value(n) + 1);
        assert_eq!(p.nonzero_count(), distinct_ab_count(n));
    }
}

#[test]
fn g_by_exhaustive_compositions() {
    for n in 1..=12 {
        let best = compositions(n)
            .iter()
            .map(|c| {
                let mut rest = n;
                c.parts()
                    .iter()
                    .map(|&k| {
                        rest -= k;
                        (k - 1) * rest
                    })
                    .sum::<usize>()
            })
            .max()
            .unwrap();
        assert_eq!(g_value(n), best, "n = {n}");
        let p = dyckflip::DyckPath::minimal(g_argmax(n).parts());
        assert_eq!(p.ab(), binomial(n, 2) as usize - best);
    }
}

#[test]
fn f_matrices() {
    let f2 = fqt(2);
    assert_eq!(f2.rows(), &[vec![0.into(), 1.into()], vec![1.into(), 0.into()]]);
    for n in 0..=9 {
        let f = fqt(n);
        assert_eq!(f.total(), BigInt::from(enumerate_paths(n).count()));
        assert!(f.is_symmetric());
        let s = binomial(n, 2) as usize;
        let degrees = f.ab_degrees();
        assert_eq!(degrees.first(), Some(&(s - g_value(n))));
        assert_eq!(degrees.last(), Some(&s));
        assert_eq!(f.diagonal().nonzero_count(), distinct_ab_count(n));
    }
}

#[test]
fn g_matrices_are_symmetric() {
    for n in 0..=9 {
        let g = gqt(n);
        assert!(g.is_symmetric(), "n = {n}");
        assert_eq!(g.total(), BigInt::from(af_bf_union(n).len()));
    }
}

proptest! {
    #[test]
    fn q_binomial_shape(m in 0usize..14, k in 0usize..14) {
        let p = q_binomial(m, k);
        if k > m {
            prop_assert!(p.is_zero());
        } else {
            prop_assert_eq!(p.degree(), Some(k * (m - k)));
            prop_assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(binomial(m, k)));
            let c = p.coefficients();
            prop_assert!(c.iter().all(|x| *x > BigInt::from(0)));
            prop_assert!(c.iter().eq(c.iter().rev()));
            prop_assert_eq!(&p, &q_binomial(m, m - k));
        }
    }

    #[test]
    fn product_evaluates_pointwise(
        a in proptest::collection::vec(-20i64..20, 0..8),
        b in proptest::collection::vec(-20i64..20, 0..8),
        q in -3i64..4,
    ) {
        let pa = UnivariatePolynomial::new(a.into_iter().map(BigInt::from).collect());
        let pb = UnivariatePolynomial::new(b.into_iter().map(BigInt::from).collect());
        let q = BigInt::from(q);
        prop_assert_eq!((&pa * &pb).eval(&q), pa.eval(&q) * pb.eval(&q));
        prop_assert_eq!((&pa + &pb).eval(&q), pa.eval(&q) + pb.eval(&q));
    }
}
