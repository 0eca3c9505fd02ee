//! Characteristic polynomials against a cofactor-expansion determinant of
//! `xI - H` with coefficients in `Z[ω]`.

use hermsym::{exact_hermitian, Digraph, EisensteinInt};
use proptest::prelude::*;

type Poly = Vec<EisensteinInt>; // lowest degree first

fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![EisensteinInt::ZERO; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = out[i] + c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = out[i] + c;
    }
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![EisensteinInt::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![EisensteinInt::ONE];
    }
    let mut total = vec![EisensteinInt::ZERO];
    for col in 0..n {
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, p)| p.clone()).collect()).collect();
        let mut term = mul(&m[0][col], &det(&minor));
        if col % 2 == 1 {
            term.iter_mut().for_each(|c| *c = -*c);
        }
        total = add(&total, &term);
    }
    total
}

fn cofactor_char_poly(d: &Digraph) -> Vec<i128> {
    let h = exact_hermitian(d);
    let n = d.n();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = -h.entry(i, j);
                    if i == j {
                        vec![c, EisensteinInt::ONE]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    let p = det(&m);
    let mut coeffs: Vec<i128> = p
        .iter()
        .map(|c| {
            assert!(c.is_real(), "non-real coefficient {c}");
            c.a
        })
        .collect();
    coeffs.resize(n + 1, 0);
    coeffs.reverse();
    coeffs
}

fn digraph() -> impl Strategy<Value = Digraph> {
    (0usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(0u8..4, n * n.saturating_sub(1) / 2).prop_map(move |cells| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    // 0 none, 1 u->v, 2 v->u, 3 digon
                    if cells[k] & 1 == 1 {
                        arcs.push((u, v));
                    }
                    if cells[k] & 2 == 2 {
                        arcs.push((v, u));
                    }
                    k += 1;
                }
            }
            Digraph::new(n, arcs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn newton_matches_cofactor_expansion(d in digraph()) {
        prop_assert_eq!(exact_hermitian(&d).char_poly().unwrap().0, cofactor_char_poly(&d));
    }
}
