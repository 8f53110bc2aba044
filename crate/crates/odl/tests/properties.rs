use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use odl::chow::{product, projective_space, Variety};
use odl::sheaves::SheafClass;
use odl::symfun::{schur_in_elementary, schur_product, Partition, SchurVector};
use odl::Rat;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..4, 0..4).prop_map(|v| Partition::from_unsorted(&v))
}

/// `dim S_λ(C^n)` by the hook-content formula.
fn schur_dim(l: &Partition, n: i64) -> BigRational {
    let mut num = BigRational::from_integer(1.into());
    for (i, j) in l.cells() {
        num *= BigRational::from_integer(BigInt::from(n + j as i64 - i as i64));
    }
    num / BigRational::from_integer(BigInt::from(l.hook_product()))
}

fn lines(x: &Variety, degrees: &[Vec<i64>]) -> SheafClass {
    degrees.iter().fold(x.trivial(0), |acc, d| acc.add(&x.line(d).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_arithmetic_matches_bigrational(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = Rat::new(a, b);
        let y = Rat::new(c, d);
        let big = |n: i64, m: i64| BigRational::new(n.into(), m.into());
        prop_assert_eq!((&x * &y).to_big(), big(a, b) * big(c, d));
        prop_assert_eq!((&x + &y).to_big(), big(a, b) + big(c, d));
        prop_assert_eq!((&x - &y).to_big(), big(a, b) - big(c, d));
    }

    #[test]
    fn littlewood_richardson_preserves_dimension(l in partition(), m in partition(), n in 3i64..6) {
        let prod = schur_product(&SchurVector::single(l.clone()), &SchurVector::single(m.clone()), None);
        let mut total = BigRational::from_integer(0.into());
        for (nu, c) in prod.terms() {
            prop_assert_eq!(nu.size(), l.size() + m.size());
            total += schur_dim(nu, n) * BigRational::from_integer((*c).into());
        }
        prop_assert_eq!(total, schur_dim(&l, n) * schur_dim(&m, n));
    }

    #[test]
    fn jacobi_trudi_round_trip(l in partition()) {
        let back = schur_in_elementary(&l, 12).to_schur().unwrap();
        prop_assert_eq!(back, SchurVector::single(l));
    }

    #[test]
    fn hrr_on_projective_space(n in 1u32..8, d in -12i64..12) {
        let p = projective_space(n).unwrap();
        let chi = p.euler_characteristic(&p.line(&[d]).unwrap()).unwrap();
        // (d+1)(d+2)...(d+n)/n!, valid for every d
        let want = (1..=n as i64).fold(Rat::int(1), |acc, i| acc * Rat::int(d + i) / Rat::int(i));
        prop_assert_eq!(chi, want);
    }

    #[test]
    fn whitney_and_serre_on_products(a in prop::collection::vec((-3i64..4, -3i64..4), 1..4), b in prop::collection::vec((-3i64..4, -3i64..4), 1..4)) {
        let x = product(&projective_space(2).unwrap(), &projective_space(3).unwrap()).unwrap();
        let to_vec = |v: &[(i64, i64)]| v.iter().map(|&(p, q)| vec![p, q]).collect::<Vec<_>>();
        let e = lines(&x, &to_vec(&a));
        let f = lines(&x, &to_vec(&b));
        prop_assert_eq!(e.add(&f).chern(), e.chern().mul(&f.chern()));
        // χ(F) = (−1)^dim χ(F* ⊗ K)
        let lhs = x.euler_characteristic(&e).unwrap();
        let rhs = x.euler_characteristic(&e.dual().tensor(&x.canonical())).unwrap();
        prop_assert_eq!(lhs, rhs * Rat::int(-1));
    }
}
