//! Worked examples checked against their published matrices and invariants.

use trikoszul::homology::{build_koszul_model, canonical_a1_generators};
use trikoszul::invariants::count_p_structural;
use trikoszul::{build_resolution, classify, Config, Field, KoszulClass, Monomial, MonomialIdeal, Rational, Resolution};

fn ideal(s: &str) -> MonomialIdeal {
    s.parse().unwrap()
}

/// `(row, col, sign, [ax, ay, az])`
type Entry = (usize, usize, i64, [u32; 3]);

fn assert_matrix(m: &trikoszul::MultigradedMatrix<Rational>, rows: usize, cols: usize, expected: &[Entry]) {
    assert_eq!((m.rows(), m.cols()), (rows, cols));
    let mut nonzero = 0;
    for r in 0..rows {
        for c in 0..cols {
            if m.entry(r, c).is_some() {
                nonzero += 1;
            }
        }
    }
    assert_eq!(nonzero, expected.len());
    for &(r, c, sign, e) in expected {
        let (coeff, mono) = m.entry(r, c).unwrap_or_else(|| panic!("missing entry ({r}, {c})"));
        assert_eq!(coeff, Rational::from_i64(sign), "sign at ({r}, {c})");
        assert_eq!(mono.exps(), e, "monomial at ({r}, {c})");
    }
}

#[test]
fn example_3_1_resolution() {
    let i = ideal("x^3,x^2*y,y^3,z^3,x^2*z^2");
    let res: Resolution<Rational> = build_resolution(&i, 20).unwrap();
    assert_eq!(res.betti(), [1, 5, 6, 2]);
    #[rustfmt::skip]
    let f2 = [
        (0, 0, -1, [0, 1, 0]), (0, 1, -1, [0, 0, 2]),
        (1, 0, 1, [1, 0, 0]), (1, 2, -1, [0, 2, 0]), (1, 3, -1, [0, 0, 2]),
        (2, 2, 1, [2, 0, 0]), (2, 4, -1, [0, 0, 3]),
        (3, 4, 1, [0, 3, 0]), (3, 5, -1, [2, 0, 0]),
        (4, 1, 1, [1, 0, 0]), (4, 3, 1, [0, 1, 0]), (4, 5, 1, [0, 0, 1]),
    ];
    assert_matrix(&res.f2, 5, 6, &f2);
    #[rustfmt::skip]
    let f3 = [
        (0, 0, 1, [0, 0, 2]), (1, 0, -1, [0, 1, 0]), (2, 1, 1, [0, 0, 3]),
        (3, 0, 1, [1, 0, 0]), (3, 1, -1, [0, 2, 1]), (4, 1, 1, [2, 0, 0]), (5, 1, 1, [0, 3, 0]),
    ];
    assert_matrix(&res.f3, 6, 2, &f3);
}

#[test]
fn example_3_1_algebra() {
    let i = ideal("x^3,x^2*y,y^3,z^3,x^2*z^2");
    let alg = build_koszul_model::<Rational>(&i, 1000).unwrap().homology();
    assert_eq!(alg.dims(), (5, 6, 2));
    assert_eq!((alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2()), (1, 1, 2));
    // x^2 z^2 contributes x z^2 e1, since x^2 z lies outside I
    let gens: Vec<(Monomial, usize)> = canonical_a1_generators(&i);
    let want = [
        (Monomial::new(2, 0, 0), 0),
        (Monomial::new(1, 1, 0), 0),
        (Monomial::new(0, 2, 0), 1),
        (Monomial::new(0, 0, 2), 2),
        (Monomial::new(1, 0, 2), 0),
    ];
    assert_eq!(gens, want);
    assert!(!i.contains(Monomial::new(2, 0, 1)));
}

#[test]
fn example_4_1_generic_four_generators() {
    // one exponent of the mixed generator is zero
    let i = ideal("x^4,y^5,z^3,y^2*z^2");
    let res: Resolution<Rational> = build_resolution(&i, 20).unwrap();
    assert_eq!(res.betti(), [1, 4, 5, 2]);
    assert_eq!(count_p_structural(&res, &i), 3);
    let r = classify(&i, &Config::default()).unwrap();
    assert_eq!((r.p, r.q, r.r), (3, 2, 2));
    assert_eq!(r.cls, KoszulClass::H(3, 2));

    // all exponents positive
    let i = ideal("x^4,y^5,z^3,x^2*y^3*z");
    let res: Resolution<Rational> = build_resolution(&i, 20).unwrap();
    assert_eq!(res.betti(), [1, 4, 6, 3]);
    let r = classify(&i, &Config::default()).unwrap();
    assert_eq!((r.p, r.q, r.r), (3, 0, 0));
    assert_eq!(r.cls, KoszulClass::T);
    assert_eq!(r.truncated_exterior, Some(true));
}

#[test]
fn example_4_2() {
    let i = ideal("x^5,y^5,z^5,y^3*z^3,x*y^4*z^2,x*y^2*z^4");
    let res: Resolution<Rational> = build_resolution(&i, 20).unwrap();
    assert_eq!(res.betti(), [1, 6, 11, 6]);
    let in_ideal = (0..res.f2.cols())
        .filter(|&c| res.f2.column(c).iter().all(|(_, _, m)| i.contains(*m)))
        .count();
    assert_eq!(in_ideal, 3);
    let r = classify(&i, &Config { confirm_with_beta2: true, ..Config::default() }).unwrap();
    assert_eq!((r.p, r.q, r.r), (3, 0, 0));
    assert_eq!(r.cls, KoszulClass::H(3, 0));
    assert_eq!(r.truncated_exterior, Some(false));
}

#[test]
fn table_of_non_generic_ideals() {
    let rows = [
        ("x^6,y^6,z^6,x^3*y^2*z,x^2*y^3*z,x*y*z^3", (3, 0, 0), KoszulClass::T),
        ("x^6,y^6,z^6,x^3*z,y^3*z,x*y*z^3", (1, 1, 2), KoszulClass::B),
        ("x^6,y^6,z^6,x^3*y^3,x^3*y^2*z", (2, 1, 1), KoszulClass::H(2, 1)),
        ("x^6,y^6,z^6,x^3*y^3,x^3*z^3,y^3*z^3,x*y*z^4", (0, 0, 0), KoszulClass::H(0, 0)),
        ("x^2,x*y,x*z,y^2,y*z,z^2", (0, 0, 0), KoszulClass::H(0, 0)),
        ("x^3,x^2*y,x^2*z,x*y^2,x*y*z,x*z^2,y^3,y^2*z,y*z^2,z^3", (0, 0, 0), KoszulClass::H(0, 0)),
    ];
    for (text, pqr, cls) in rows {
        let r = classify(&ideal(text), &Config::default()).unwrap();
        assert_eq!((r.p, r.q, r.r), pqr, "{text}");
        assert_eq!(r.cls, cls, "{text}");
    }
}
