//! Face counts of graphical zonotopes.
//!
//! Two formula routes are provided:
//!
//! * [`f_poly_flats`] sums `a(G/F) q^rk(F)` over the flats `F` of the
//!   graphical matroid;
//! * [`f_poly_main`] takes `(-1)^n chi_{-q}(G, -1)` from the q-chromatic
//!   symmetric function.
//!
//! Both are stated for connected graphs. For a disconnected graph the flat
//! sum still factors over components and equals the product of the
//! components' polynomials, and so does the specialization, so both routes
//! are accepted there too; the result is the f-polynomial of the product of
//! the components' zonotopes.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::chromatic::acyclic_count;
use crate::error::{invalid, Result};
use crate::flats::{enumerate_flats, Flat};
use crate::graph::{Edge, Graph};
use crate::poly::{binomial, IntPolynomial};
use crate::qsym::{chi_q_with_budget, DEFAULT_BUDGET};

/// `f(Z_G, q) = sum_F a(G/F) q^rk(F)`.
pub fn f_poly_flats(g: &Graph) -> IntPolynomial {
    let flats: Vec<Flat> = enumerate_flats(g).collect();
    flats
        .par_iter()
        .map(|f| IntPolynomial::monomial(acyclic_count(&f.contract(g)), f.rank()))
        .reduce(IntPolynomial::zero, |a, b| &a + &b)
}

/// `f(Z_G, q) = (-1)^n chi_{-q}(G, -1)`.
pub fn f_poly_main(g: &Graph) -> Result<IntPolynomial> {
    f_poly_main_with_budget(g, DEFAULT_BUDGET)
}

pub fn f_poly_main_with_budget(g: &Graph, budget: usize) -> Result<IntPolynomial> {
    let chi = chi_q_with_budget(g, budget)?;
    let value = chi.eval(&IntPolynomial::x().negate_var(), -1);
    Ok(if g.n().is_multiple_of(2) {
        value
    } else {
        -value
    })
}

/// Face counts `f_0, .., f_rk` read off the flat expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<BigInt>);

impl FVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        FVector(counts)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.0.clone())
    }

    pub fn from_polynomial(p: &IntPolynomial, len: usize) -> Self {
        FVector((0..len).map(|k| p.coeff(k)).collect())
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.to_decimal_strings().join(", "))
    }
}

pub fn f_vector(g: &Graph) -> FVector {
    FVector::from_polynomial(&f_poly_flats(g), g.rank() + 1)
}

/// One term `coefficient * G_{V,F}` of the antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeTerm {
    pub coefficient: BigInt,
    pub flat_edges: Vec<Edge>,
    pub rank: usize,
}

/// Cancellation-free antipode `S(G) = sum_F (-1)^c(F) a(G/F) G_{V,F}`,
/// one term per flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeExpansion {
    pub host: Graph,
    pub terms: Vec<AntipodeTerm>,
}

impl AntipodeExpansion {
    /// Applies the character `zeta_q(H) = q^rk(H)` term by term.
    pub fn apply_zeta_q(&self) -> IntPolynomial {
        self.terms
            .iter()
            .map(|t| IntPolynomial::monomial(t.coefficient.clone(), t.rank))
            .sum()
    }
}

pub fn antipode(g: &Graph) -> AntipodeExpansion {
    let terms = enumerate_flats(g)
        .map(|f| {
            let a = acyclic_count(&f.contract(g));
            AntipodeTerm {
                coefficient: if f.component_count() % 2 == 0 { a } else { -a },
                flat_edges: f.edge_set().to_vec(),
                rank: f.rank(),
            }
        })
        .collect();
    AntipodeExpansion {
        host: g.clone(),
        terms,
    }
}

/// `(zeta_q o S)(G)`, which equals `chi_q(G, -1)`.
pub fn zeta_q_of_antipode(g: &Graph) -> IntPolynomial {
    antipode(g).apply_zeta_q()
}

/// Eulerian polynomial `A_n(q)` from `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
pub fn eulerian_poly(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(invalid("Eulerian polynomial needs n >= 1"));
    }
    let mut row = vec![BigInt::from(1)];
    for m in 2..=n {
        let next = (0..m)
            .map(|k| {
                let keep = row.get(k).map_or(BigInt::from(0), |a| a * (k + 1));
                let bump = if k > 0 {
                    &row[k - 1] * (m - k)
                } else {
                    BigInt::from(0)
                };
                keep + bump
            })
            .collect();
        row = next;
    }
    Ok(IntPolynomial::from_coeffs(row))
}

/// `q^n + q^(n-1) + (q+2)^n - 2(q+1)^n`.
pub fn f_poly_cycle_closed(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let e = n as u32;
    let q2 = IntPolynomial::from_i64s(&[2, 1]).pow(e);
    let q1 = IntPolynomial::from_i64s(&[1, 1])
        .pow(e)
        .scale(&BigInt::from(2));
    Ok(&(&(&IntPolynomial::monomial(1, n) + &IntPolynomial::monomial(1, n - 1)) + &q2) - &q1)
}

/// `f_{n-k}(Z_{C_n}) = (2^k - 2) C(n, k)` for `2 <= k <= n`.
pub fn cycle_face_count(n: usize, k: usize) -> BigInt {
    (BigInt::from(2).pow(k as u32) - 2) * binomial(&BigInt::from(n), k)
}
