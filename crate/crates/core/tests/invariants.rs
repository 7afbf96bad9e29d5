use proptest::prelude::*;
use socle_core::homology::{depth, dimension_filtration, free_resolution, is_cohen_macaulay, r_invariants, Subquotient};
use socle_core::invariants::{hilbert_samuel, index_of_reducibility, socle_ideal, FitOptions};
use socle_core::oracle::oracle_filtration;
use socle_core::sop::{is_distinguished, is_system_of_parameters, random_distinguished_sop};
use socle_core::{Ideal, Monomial, PolyRing, Polynomial, PrimeField, TermOrder};

fn ring(names: &[&str]) -> PolyRing {
    PolyRing::new(names, PrimeField::default(), TermOrder::GrevLex).unwrap()
}

fn mono(r: &PolyRing, e: &[u32]) -> Polynomial {
    r.monomial(Monomial::from_exponents(e).unwrap(), 1)
}

fn monomial_ideal(r: &PolyRing, gens: &[Vec<u32>]) -> Ideal {
    Ideal::new(r, gens.iter().map(|e| mono(r, e)).collect()).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `ℓ(k[x,y]/(x^a, y^b)^{n+1})` by counting monomials `x^i y^j` with no
/// `(s, t)`, `s + t = n + 1`, such that `i ≥ s a` and `j ≥ t b`.
fn count_power_colength(a: u32, b: u32, n: u32) -> u64 {
    let mut c = 0;
    for i in 0..(a * (n + 1)) {
        for j in 0..(b * (n + 1)) {
            if !(0..=n + 1).any(|s| i >= s * a && j >= (n + 1 - s) * b) {
                c += 1;
            }
        }
    }
    c
}

#[test]
fn example_ring_filtration_and_socle_ranks() {
    let r = ring(&["x1", "x2", "x3", "y"]);
    let j = Ideal::new(&r, vec![mono(&r, &[1, 0, 0, 1]), mono(&r, &[0, 1, 0, 1]), mono(&r, &[0, 0, 1, 1])]).unwrap();
    let f = dimension_filtration(&j).unwrap();
    assert_eq!(f.dims, vec![1, 3]);
    assert!(f.ideals[1].equals(&Ideal::new(&r, vec![r.var(3)]).unwrap()));
    let m = Subquotient::quotient_ring(&j);
    assert_eq!(depth(&m).unwrap(), 1);
    assert_eq!(r_invariants(&m).unwrap(), vec![0, 1, 0, 1]);
}

#[test]
fn koszul_resolution_of_the_residue_field() {
    let r = ring(&["x", "y", "z"]);
    let m = Subquotient::new(Ideal::unit(&r), Ideal::maximal(&r)).unwrap();
    let res = free_resolution(&m).unwrap();
    assert_eq!(res.betti(), vec![1, 3, 3, 1]);
    assert!(res.is_minimal());
    assert!(res.is_complex(&m));
}

#[test]
fn two_planes_closed_forms() {
    // k[x,y,u,v]/(xu,xv,yu,yv): monomials live in k[x,y] or k[u,v], so
    // ℓ(R/m^{n+1}) = 2 binom(n+2, 2) - 1.
    let r = ring(&["x", "y", "u", "v"]);
    let j = monomial_ideal(&r, &[vec![1, 0, 1, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]);
    let m = Subquotient::quotient_ring(&j);
    assert!(!is_cohen_macaulay(&m).unwrap());
    assert_eq!(depth(&m).unwrap(), 1);
    let hs = hilbert_samuel(&Ideal::maximal(&r), &m, FitOptions::default()).unwrap();
    for (n, v) in hs.values.iter().enumerate() {
        assert_eq!(*v, 2 * binom(n as u64 + 2, 2) - 1);
    }
    assert_eq!(hs.coefficients, vec![2, 0, -1]);
    // q = (x + u, y + v): q^{n+1} is spanned in degree n + 1 by the n + 2
    // pairs (f(x,y), f(u,v)) and contains every form of degree > n + 1, so
    // ℓ(R/q^{n+1}) = 2 binom(n+2, 2) - 1 + (n + 2).
    let q = Ideal::new(&r, vec![r.add(&r.var(0), &r.var(2)), r.add(&r.var(1), &r.var(3))]).unwrap();
    let hq = hilbert_samuel(&q, &m, FitOptions::default()).unwrap();
    for (n, v) in hq.values.iter().enumerate() {
        assert_eq!(*v, 2 * binom(n as u64 + 2, 2) + n as u64 + 1);
    }
    assert_eq!(hq.coefficients, vec![2, -1, 0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn monomial_parameters_of_the_plane(a in 2u32..5, b in 2u32..5) {
        let r = ring(&["x", "y"]);
        let j = Ideal::zero(&r);
        let m = Subquotient::quotient_ring(&j);
        let q = monomial_ideal(&r, &[vec![a, 0], vec![0, b]]);
        let hs = hilbert_samuel(&q, &m, FitOptions::default()).unwrap();
        for (n, v) in hs.values.iter().enumerate() {
            prop_assert_eq!(*v, count_power_colength(a, b, n as u32));
        }
        prop_assert_eq!(hs.coefficients.clone(), vec![(a * b) as i64, 0, 0]);
        prop_assert_eq!(index_of_reducibility(&q, &m).unwrap(), 1);
        let socle = socle_ideal(&q, &j).unwrap();
        let expected = q.extend(&[mono(&r, &[a - 1, b - 1])]).unwrap();
        prop_assert!(socle.equals(&expected));
        let i2 = socle.power(2);
        prop_assert!(i2.equals(&q.product(&socle).unwrap()));
    }

    #[test]
    fn filtration_matches_monomial_decomposition(
        gens in proptest::collection::vec(proptest::collection::vec(0u32..3, 4), 1..5)
            .prop_filter("proper, nonzero", |g| g.iter().all(|e| e.iter().any(|&x| x > 0)))
    ) {
        let r = ring(&["a", "b", "c", "d"]);
        let j = monomial_ideal(&r, &gens);
        let f = dimension_filtration(&j).unwrap();
        let (dims, ideals) = oracle_filtration(&j).unwrap();
        prop_assert_eq!(&f.dims, &dims);
        prop_assert_eq!(f.ideals.len(), ideals.len());
        for (x, y) in f.ideals.iter().zip(&ideals) {
            prop_assert!(x.equals(y));
        }
    }

    #[test]
    fn random_sops_are_distinguished(seed in 0u64..1000, depth_ in 1u32..3) {
        // (x^2, xy): a plane with an embedded line
        let r = ring(&["x", "y", "z"]);
        let j = monomial_ideal(&r, &[vec![2, 0, 0], vec![1, 1, 0]]);
        let f = dimension_filtration(&j).unwrap();
        let sop = random_distinguished_sop(&j, &f, depth_, seed, 50).unwrap();
        prop_assert!(is_system_of_parameters(&sop.elements, &j).unwrap());
        prop_assert!(is_distinguished(&sop.elements, &j, &f).unwrap());
        for x in &sop.elements {
            prop_assert!(x.order().unwrap() >= depth_);
        }
    }
}
