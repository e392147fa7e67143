use grothendieck::poly::{determinant_bareiss, determinant_cofactor, Monomial, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;

const ARITY: usize = 3;

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, ARITY), 0u32..3, -6i64..7),
        0..=max_terms,
    )
    .prop_map(|terms| {
        Poly::from_terms(
            ARITY,
            terms.into_iter().map(|(x, b, c)| (Monomial::new(x, b), BigInt::from(c))),
        )
        .unwrap()
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly_strategy(4).prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix_strategy(size: usize) -> impl Strategy<Value = Vec<Vec<Poly>>> {
    prop::collection::vec(prop::collection::vec(poly_strategy(2), size), size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(5), b in poly_strategy(5), c in poly_strategy(5)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(ARITY), a.clone());
    }

    #[test]
    fn division_inverts_multiplication(a in poly_strategy(5), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn text_form_round_trips(a in poly_strategy(6)) {
        let text = a.to_string();
        prop_assert_eq!(Poly::parse(&text, ARITY).unwrap(), a);
    }

    #[test]
    fn determinant_paths_agree(m in matrix_strategy(3)) {
        prop_assert_eq!(determinant_cofactor(&m, ARITY).unwrap(), determinant_bareiss(&m, ARITY).unwrap());
    }

    #[test]
    fn determinant_is_alternating_and_row_linear(
        m in matrix_strategy(3),
        extra in prop::collection::vec(poly_strategy(2), 3),
        s in poly_strategy(2),
    ) {
        let det = determinant_cofactor(&m, ARITY).unwrap();
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(determinant_cofactor(&swapped, ARITY).unwrap(), -&det);

        // det(r0 + s·v, r1, r2) = det(r0, r1, r2) + s·det(v, r1, r2)
        let mut combined = m.clone();
        let mut replaced = m.clone();
        for j in 0..3 {
            combined[1][j] = &m[1][j] + &(&s * &extra[j]);
            replaced[1][j] = extra[j].clone();
        }
        let lhs = determinant_cofactor(&combined, ARITY).unwrap();
        let rhs = &det + &(&s * &determinant_cofactor(&replaced, ARITY).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn beta_rescale_is_identity_at_beta_one(a in poly_strategy(5), extra in 0i64..3) {
        // Any d at least the largest x-degree keeps every exponent non-negative.
        let d = a.terms().map(|(m, _)| i64::from(m.x_degree())).max().unwrap_or(0) + extra;
        let one = BigInt::from(1);
        let rescaled = a.beta_rescale(d).unwrap();
        prop_assert_eq!(rescaled.substitute_beta(&one), a.substitute_beta(&one));
    }
}

#[test]
fn bareiss_on_larger_matrices() {
    // A 5×5 Vandermonde in x1..x3 and β: det = Π_{i<j} (t_j − t_i) for the
    // column generators t = (x1, x2, x3, β, x1 + x2).
    let n = 3;
    let gens = [
        Poly::var(n, 0),
        Poly::var(n, 1),
        Poly::var(n, 2),
        Poly::beta(n),
        &Poly::var(n, 0) + &Poly::var(n, 1),
    ];
    let m: Vec<Vec<Poly>> = (0..5).map(|i| gens.iter().map(|g| g.pow(i as u32)).collect()).collect();
    let mut expected = Poly::one(n);
    for i in 0..5 {
        for j in i + 1..5 {
            expected = &expected * &(&gens[j] - &gens[i]);
        }
    }
    assert_eq!(determinant_bareiss(&m, n).unwrap(), expected);
    assert_eq!(grothendieck::poly::determinant(&m, n).unwrap(), expected);
    assert_eq!(determinant_cofactor(&m, n).unwrap(), expected);
}
