use proptest::prelude::*;

use qzeta::cli::{pick, ConfigFile};
use qzeta::exact::{int, rat, LaurentPoly, Monomial, Rational, Var};
use qzeta::partitions::{complement_in_rectangle, hall_g, partitions_in_rectangle, Partition};
use qzeta::qkit::{binomial, qbinom};
use qzeta::report::Status;
use qzeta::rrsums::{check_identity, x_closed, x_multisum, Instance, RunSettings};
use qzeta::Error;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..4, -2i32..3, -5i64..6), 0..6).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(a, b, c)| (Monomial::from_pairs(&[(Var::Q, a), (Var::T, b)]), int(c))))
    })
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    (1i64..9, 1i64..9, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1i64..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).expect("sorted positive parts")
    })
}

fn q() -> Monomial {
    Monomial::var(Var::Q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly(), b in poly(), x in nonzero_rat(), y in nonzero_rat()) {
        let p = [(Var::Q, x), (Var::T, y)];
        prop_assert_eq!((&a * &b).eval(&p).unwrap(), a.eval(&p).unwrap() * b.eval(&p).unwrap());
    }

    #[test]
    fn gaussian_binomials(n in 0i64..9, k in 0i64..9) {
        prop_assume!(k <= n);
        let g = qbinom(n, k, q());
        prop_assert_eq!(&g, &qbinom(n, n - k, q()));
        prop_assert_eq!(g.eval(&[(Var::Q, int(1))]).unwrap(), Rational::from(binomial(n, k)));
        if n >= 1 && k >= 1 {
            let pascal = &qbinom(n - 1, k - 1, q()) + &qbinom(n - 1, k, q()).mul_mono(&Monomial::var_pow(Var::Q, k as i32));
            prop_assert_eq!(g, pascal);
        }
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn hall_polynomials_in_a_rectangle(m in 1i64..4, n in 1i64..4) {
        let lambda = Partition::rectangle(m, n);
        prop_assert!(hall_g(&lambda, &Partition::empty(), q()).is_one());
        prop_assert!(hall_g(&lambda, &lambda, q()).is_one());
        for mu in partitions_in_rectangle(m, n) {
            let nu = complement_in_rectangle(&mu, m, n).unwrap();
            prop_assert_eq!(complement_in_rectangle(&nu, m, n).unwrap(), mu.clone());
            prop_assert_eq!(hall_g(&lambda, &mu, q()), hall_g(&lambda, &nu, q()));
        }
    }

    #[test]
    fn x_is_independent_of_a(m in 1usize..3, big_n in 0i64..4, a in nonzero_rat(), t in nonzero_rat(), qd in 2i64..7) {
        let qv = rat(1, qd);
        let want = x_closed(m, big_n, &t, &qv);
        let got = x_multisum(m, big_n, &a, &t, &qv);
        match (got, want) {
            (Ok(g), Ok(w)) => prop_assert_eq!(g, w),
            (Err(Error::PoleAtPoint), _) | (_, Err(Error::PoleAtPoint)) => {}
            (g, w) => prop_assert!(false, "unexpected {:?} / {:?}", g.err(), w.err()),
        }
    }

    #[test]
    fn master_reflection_and_sieve(m in 1usize..4, n in 1i64..5, r in 1i64..5) {
        let s = RunSettings::default();
        let refl = check_identity("master-reflection", &Instance::new(m, n), &s).unwrap();
        prop_assert_eq!(refl.status, Status::Pass, "{}", refl);
        prop_assume!(n % r == 0);
        let sieve = check_identity("sieve", &Instance::new(m, n).k(r), &s).unwrap();
        prop_assert_eq!(sieve.status, Status::Pass, "{}", sieve);
    }

    #[test]
    fn config_file_round_trip(order in 10usize..60, seed in any::<u64>(), cli in prop::option::of(10usize..60), pad in 0usize..3) {
        let sp = " ".repeat(pad);
        let text = format!("# settings\nQ{sp}={sp}{order}\n\nseed={seed}\n");
        let f = ConfigFile::parse(&text).unwrap();
        prop_assert_eq!(f.get::<u64>("seed").unwrap(), Some(seed));
        prop_assert_eq!(pick(cli, &f, "Q", 25).unwrap(), cli.unwrap_or(order));
        prop_assert_eq!(pick(None, &f, "points", 5usize).unwrap(), 5);
    }
}
