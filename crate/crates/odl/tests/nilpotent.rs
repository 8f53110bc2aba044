use odl::chow::{product, projective_space, quadric, zero_locus, Variety};
use odl::nilpotent::catalog::fano3_nilpotent;
use odl::nilpotent::{canonical_exponent, invariants, NilpotentLocusConfig, OrbitChoice};
use odl::sheaves::SheafClass;
use odl::symfun::Partition;
use odl::Rat;

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn conjugate(p: &[u32]) -> Vec<u32> {
    (1..=p.first().copied().unwrap_or(0)).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

fn pn(n: u32) -> Variety {
    projective_space(n).unwrap()
}

fn sum_of_lines(x: &Variety, degrees: &[i64]) -> SheafClass {
    degrees.iter().fold(x.trivial(0), |acc, &d| acc.add(&x.line(&[d]).unwrap()))
}

fn cfg(x: &Variety, e: &SheafClass, p: &[u32]) -> NilpotentLocusConfig {
    let l = x.line(&[1]).unwrap();
    NilpotentLocusConfig::new("test", x.clone(), e.clone(), l, OrbitChoice::Partition(Partition::new(p).unwrap()))
        .unwrap()
}

/// `χ(Ω^p)` for all `p`, from the tangent class alone.
fn chi_omega(z: &Variety) -> Vec<Rat> {
    let omega = z.tangent.dual();
    (0..=z.dim as usize).map(|p| z.euler_characteristic(&omega.wedge(p)).unwrap()).collect()
}

fn anticanonical_degree(z: &Variety) -> Rat {
    z.integrate(&z.tangent.c(1).pow(z.dim)).unwrap()
}

#[test]
fn dimension_matches_orbit_codimension() {
    // dim O_λ = e² − Σ (λ'_i)², so codim in sl_e is Σ (λ'_i)² − 1
    for e in 2..=5u32 {
        for p in partitions(e, e) {
            if p.len() == e as usize {
                continue;
            }
            let codim: u32 = conjugate(&p).iter().map(|c| c * c).sum::<u32>() - 1;
            let x = pn(codim + 1);
            let c = cfg(&x, &x.trivial(e as i64), &p);
            let z = c.resolution().unwrap().z;
            assert_eq!(z.dim, 1, "partition {p:?}");
            assert_eq!(c.expected_dim().unwrap(), 1, "partition {p:?}");
        }
    }
}

#[test]
fn full_cone_canonical_exponent() {
    for e in 2..=5u32 {
        let x = pn(e * e);
        let c = cfg(&x, &x.trivial(e as i64), &[e]);
        let m = canonical_exponent(&c).unwrap().unwrap();
        assert_eq!(m, Rat::int((e * (e + 1) / 2) as i64 - 1), "e = {e}");
    }
}

#[test]
fn minimal_orbit_exponent() {
    for e in 2..=5u32 {
        let x = pn(2 * e);
        let mut p = vec![2];
        p.extend(std::iter::repeat_n(1, e as usize - 2));
        let c = cfg(&x, &x.trivial(e as i64), &p);
        assert_eq!(canonical_exponent(&c).unwrap(), Some(Rat::int((e * (e - 1)) as i64)), "e = {e}");
    }
}

#[test]
fn fano_threefolds_against_their_models() {
    let rows = fano3_nilpotent();
    let p2p2 = product(&pn(2), &pn(2)).unwrap();
    let divisor = zero_locus(&p2p2, &p2p2.line(&[2, 2]).unwrap()).unwrap();
    let p6 = pn(6);
    let quadrics = zero_locus(&p6, &sum_of_lines(&p6, &[2, 2, 2])).unwrap();
    for (row, model) in rows.iter().take(2).zip([&divisor, &quadrics]) {
        let r = invariants(row.config.as_ref().unwrap()).unwrap();
        assert_eq!(r.chi_omega, chi_omega(model), "{}", row.label);
        assert_eq!(r.anticanonical_degree, Some(anticanonical_degree(model)), "{}", row.label);
    }
}

#[test]
fn minimal_orbit_with_one_negative_summand_is_a_complete_intersection() {
    // E = (n−1)O ⊕ O(−1): (n−2)(n−1) sections of O(1) and n−1 of O(2)
    for (n, big) in [(3u32, 7u32), (4, 12)] {
        let x = pn(big);
        let mut degrees = vec![0; n as usize - 1];
        degrees.push(-1);
        let mut p = vec![2];
        p.extend(std::iter::repeat_n(1, n as usize - 2));
        let r = invariants(&cfg(&x, &sum_of_lines(&x, &degrees), &p)).unwrap();
        let mut cuts = vec![1; ((n - 2) * (n - 1)) as usize];
        cuts.extend(std::iter::repeat_n(2, n as usize - 1));
        let ci = zero_locus(&x, &sum_of_lines(&x, &cuts)).unwrap();
        assert_eq!(r.dim, ci.dim);
        assert_eq!(r.chi_omega, chi_omega(&ci), "n = {n}");
    }
}

#[test]
fn minimal_orbit_with_two_negative_summands_has_no_class() {
    // E = 2O ⊕ 2O(−1) in sl_4: the locus is empty, so its class vanishes
    let x = pn(12);
    let r = invariants(&cfg(&x, &sum_of_lines(&x, &[0, 0, -1, -1]), &[2, 1, 1])).unwrap();
    assert!(!r.nonempty);
    assert_eq!(r.fundamental_class, "0");
}

#[test]
fn odd_quadric_fourfold_degree() {
    let q = quadric(13).unwrap();
    let c = NilpotentLocusConfig::new("q13", q.clone(), q.trivial(4), q.line(&[1]).unwrap(), OrbitChoice::Catalog(3))
        .unwrap();
    assert_eq!(invariants(&c).unwrap().anticanonical_degree, Some(Rat::int(40)));
}
