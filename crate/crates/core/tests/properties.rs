use proptest::prelude::*;
use socle_core::{length_subquotient, Ideal, Monomial, PolyRing, Polynomial, PrimeField, Term, TermOrder};

const P: u32 = 32003;

fn ring(n: usize, order: TermOrder) -> PolyRing {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    PolyRing::new(&names, PrimeField::new(P).unwrap(), order).unwrap()
}

fn orders() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::GrevLex), Just(TermOrder::Lex), (1usize..3).prop_map(TermOrder::Elimination)]
}

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=max, n)
}

fn poly(r: &PolyRing, terms: &[(Vec<u32>, u32)]) -> Polynomial {
    let terms = terms
        .iter()
        .map(|(e, c)| Term { mono: Monomial::from_exponents(e).unwrap(), coeff: *c % P })
        .filter(|t| t.coeff != 0)
        .collect();
    r.from_terms(terms)
}

fn terms(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    proptest::collection::vec((exps(n, 3), 0..P), 0..5)
}

/// A homogeneous polynomial of degree `deg` in `n` variables.
fn homogeneous(n: usize, deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    proptest::collection::vec((proptest::collection::vec(0..n, deg as usize), 1..P), 1..4).prop_map(move |ts| {
        ts.into_iter()
            .map(|(vars, c)| {
                let mut e = vec![0u32; n];
                for v in vars {
                    e[v] += 1;
                }
                (e, c)
            })
            .collect()
    })
}

fn homogeneous_ideal(n: usize) -> impl Strategy<Value = Vec<Vec<(Vec<u32>, u32)>>> {
    proptest::collection::vec((1u32..4).prop_flat_map(move |d| homogeneous(n, d)), 1..4)
}

fn field_elt() -> impl Strategy<Value = u32> {
    0..P
}

/// S-polynomial of two nonzero polynomials, from their leading terms.
fn s_poly(r: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = r.leading_term(f).unwrap();
    let (mg, cg) = r.leading_term(g).unwrap();
    let n = r.nvars();
    let lcm: Vec<u32> = (0..n).map(|i| mf.exp(i).max(mg.exp(i))).collect();
    let uf: Vec<u32> = (0..n).map(|i| lcm[i] - mf.exp(i)).collect();
    let ug: Vec<u32> = (0..n).map(|i| lcm[i] - mg.exp(i)).collect();
    let field = r.field();
    let a = r.mul_term(f, field.inv(cf), &Monomial::from_exponents(&uf).unwrap());
    let b = r.mul_term(g, field.inv(cg), &Monomial::from_exponents(&ug).unwrap());
    r.sub(&a, &b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in field_elt(), b in field_elt(), c in field_elt()) {
        let f = PrimeField::new(P).unwrap();
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            prop_assert_eq!(f.pow(a, (P - 1) as u64), 1);
        }
        prop_assert_eq!(f.from_i64(f.to_signed(a)), a);
    }

    #[test]
    fn ring_axioms(o in orders(), a in terms(3), b in terms(3), c in terms(3)) {
        let r = ring(3, o);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert!(r.sub(&a, &a).is_zero());
        prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
        prop_assert_eq!(r.pow(&a, 2), r.mul(&a, &a));
    }

    #[test]
    fn term_orders_are_monomial_orders(o in orders(), a in exps(3, 4), b in exps(3, 4), c in exps(3, 4)) {
        let (ma, mb, mc) = (
            Monomial::from_exponents(&a).unwrap(),
            Monomial::from_exponents(&b).unwrap(),
            Monomial::from_exponents(&c).unwrap(),
        );
        let one = Monomial::one(3);
        let mul = |x: &Vec<u32>, y: &Vec<u32>| {
            Monomial::from_exponents(&x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>()).unwrap()
        };
        prop_assert_eq!(o.cmp(&ma, &mb), o.cmp(&mb, &ma).reverse());
        prop_assert_eq!(o.cmp(&ma, &mb) == core::cmp::Ordering::Equal, a == b);
        prop_assert_eq!(o.cmp(&ma, &mb), o.cmp(&mul(&a, &c), &mul(&b, &c)));
        prop_assert!(o.cmp(&mc, &one) != core::cmp::Ordering::Less);
    }

    #[test]
    fn groebner_basis_axioms(o in orders(), gens in homogeneous_ideal(3)) {
        let r = ring(3, o);
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let gb = i.gb().generators().to_vec();
        for g in &gens {
            prop_assert!(i.normal_form(g).is_zero());
        }
        for (k, f) in gb.iter().enumerate() {
            for g in &gb[k + 1..] {
                prop_assert!(i.normal_form(&s_poly(&r, f, g)).is_zero());
            }
        }
        // same ideal under another order
        let other = Ideal::new(&r.with_order(TermOrder::GrevLex), gens.iter().map(|g| r.with_order(TermOrder::GrevLex).adopt(g)).collect()).unwrap();
        for g in &gb {
            prop_assert!(other.contains(&other.ring().adopt(g)));
        }
        for g in other.gb().generators() {
            prop_assert!(i.contains(&r.adopt(g)));
        }
    }

    #[test]
    fn normal_forms(gens in homogeneous_ideal(3), f in terms(3), h in terms(3)) {
        let r = ring(3, TermOrder::GrevLex);
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let f = poly(&r, &f);
        let nf = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&r.sub(&f, &nf)));
        let h = poly(&r, &h);
        prop_assert!(i.contains(&r.mul(&h, &gens[0])));
        // no leading monomial of the basis divides a term of the normal form
        let leads = i.leading_ideal();
        for t in nf.terms() {
            prop_assert!(leads.iter().all(|l| !(0..3).all(|v| l.exp(v) <= t.mono.exp(v))));
        }
    }

    #[test]
    fn colon_intersection_product(a in homogeneous_ideal(3), b in homogeneous_ideal(3)) {
        let r = ring(3, TermOrder::GrevLex);
        let i = Ideal::new(&r, a.iter().map(|g| poly(&r, g)).collect()).unwrap();
        let j = Ideal::new(&r, b.iter().map(|g| poly(&r, g)).collect()).unwrap();
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet) && j.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()));
        let c = i.colon(&j).unwrap();
        prop_assert!(c.contains_ideal(&i));
        prop_assert!(i.contains_ideal(&c.product(&j).unwrap()));
        let sum = i.sum(&j).unwrap();
        prop_assert!(sum.contains_ideal(&i) && sum.contains_ideal(&j));
    }
}

/// Krull dimension of `k[x]/(monomials)`: `n` minus the smallest set of
/// variables meeting every generator's support.
fn brute_monomial_dim(n: usize, gens: &[Vec<u32>]) -> Option<usize> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return None;
    }
    let mut best = n;
    for mask in 0u32..(1 << n) {
        if gens.iter().all(|g| (0..n).any(|v| mask & (1 << v) != 0 && g[v] > 0)) {
            best = best.min(mask.count_ones() as usize);
        }
    }
    Some(n - best)
}

/// Standard monomials of degree at most `bound` outside the monomial ideal.
fn count_outside(n: usize, gens: &[Vec<u32>], bound: u32) -> u64 {
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        let deg: u32 = e.iter().sum();
        if deg <= bound && !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            e[k] += 1;
            if e[k] <= bound {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

fn monomial_ideal(r: &PolyRing, gens: &[Vec<u32>]) -> Ideal {
    Ideal::new(r, gens.iter().map(|e| r.monomial(Monomial::from_exponents(e).unwrap(), 1)).collect()).unwrap()
}

fn nonconstant(n: usize) -> impl Strategy<Value = Vec<u32>> {
    exps(n, 3).prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hilbert_pole_order_is_krull_dimension(gens in proptest::collection::vec(nonconstant(4), 0..5)) {
        let r = ring(4, TermOrder::GrevLex);
        let i = monomial_ideal(&r, &gens);
        let h = i.hilbert_series().unwrap();
        prop_assert_eq!(h.dimension(), brute_monomial_dim(4, &gens));
        prop_assert_eq!(i.dim_quotient().ok(), brute_monomial_dim(4, &gens));
    }

    #[test]
    fn length_is_additive(a in proptest::collection::vec(nonconstant(3), 0..3),
                          b in proptest::collection::vec(nonconstant(3), 0..3),
                          k in 2u32..5) {
        // C = m^k ⊆ B = C + (b) ⊆ A = B + (a)
        let r = ring(3, TermOrder::GrevLex);
        let mk = Ideal::maximal(&r).power(k);
        let c = mk.clone();
        let bb = mk.extend(monomial_ideal(&r, &b).gens()).unwrap();
        let aa = bb.extend(monomial_ideal(&r, &a).gens()).unwrap();
        let ac = length_subquotient(&Ideal::unit(&r), &c).unwrap();
        let ab = length_subquotient(&Ideal::unit(&r), &bb).unwrap();
        let aa_len = length_subquotient(&Ideal::unit(&r), &aa).unwrap();
        prop_assert_eq!(length_subquotient(&aa, &c).unwrap(), length_subquotient(&aa, &bb).unwrap() + length_subquotient(&bb, &c).unwrap());
        prop_assert_eq!(ac, ab + length_subquotient(&bb, &c).unwrap());
        prop_assert_eq!(ab, aa_len + length_subquotient(&aa, &bb).unwrap());
        // against a direct count of standard monomials
        let mut gens_b: Vec<Vec<u32>> = b.clone();
        let mut e = vec![0u32; 3];
        fn all_of_degree(k: u32, e: &mut Vec<u32>, v: usize, out: &mut Vec<Vec<u32>>) {
            if v == e.len() - 1 {
                e[v] = k;
                out.push(e.clone());
                return;
            }
            for a in 0..=k {
                e[v] = a;
                all_of_degree(k - a, e, v + 1, out);
            }
        }
        let mut mk_gens = Vec::new();
        all_of_degree(k, &mut e, 0, &mut mk_gens);
        gens_b.extend(mk_gens);
        prop_assert_eq!(ab, count_outside(3, &gens_b, k));
    }
}
