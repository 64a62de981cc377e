//! The q-chromatic symmetric function in the monomial basis and its
//! principal specialization.
//!
//! For a composition `alpha = (a_1, .., a_k)` of `n` the coefficient
//! `(zeta_q)_alpha(G)` sums `q^(rk G|I_1 + .. + rk G|I_k)` over ordered set
//! partitions `(I_1, .., I_k)` of the vertex set with `|I_j| = a_j`. The
//! coefficient only depends on the multiset of parts, so the expansion is
//! stored per integer partition. Principal specialization sends `m_lambda`
//! to `j!/(i_1! .. i_r!) * C(d, j)` where `j` is the number of parts and the
//! `i`'s are the multiplicities of the distinct part sizes, so `chi_q` is
//! kept in the binomial basis `C(d, j)` where all arithmetic is integral.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{induced_rank, Graph, VertexMask};
use crate::poly::{binomial, factorial, falling_factorial, IntPolynomial, Var};

/// Default vertex limit for [`psi_q`] and everything built on it.
pub const DEFAULT_BUDGET: usize = 10;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntegerPartition(Vec<usize>);

impl IntegerPartition {
    /// Sorts `parts` into weakly decreasing order; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("integer partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(invalid("integer partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities of the distinct part sizes, largest part first.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &p in &self.0 {
            if prev == Some(p) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(p);
            }
        }
        out
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| invalid(format!("bad part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

/// All partitions of `n`, in increasing lexicographic order of their parts.
pub fn integer_partitions(n: usize) -> Vec<IntegerPartition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if rest == 0 {
            out.push(IntegerPartition(cur.clone()));
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// All compositions of `n` (ordered sequences of positive parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    // each of the n-1 gaps is either a cut or not
    (0u64..1 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for gap in 0..n - 1 {
                if cuts & (1 << gap) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

/// `(zeta_q)_alpha(g)`: sum of `q^(total induced rank)` over ordered set
/// partitions of the vertex set with block sizes `alpha`.
pub fn zeta_q_alpha(g: &Graph, alpha: &[usize]) -> Result<IntPolynomial> {
    let weight: usize = alpha.iter().sum();
    if weight != g.n() || alpha.contains(&0) {
        return Err(invalid(format!(
            "composition {alpha:?} is not a composition of n = {}",
            g.n()
        )));
    }
    let mut ctx = ZetaContext {
        adj: g.adjacency_masks(),
        alpha,
        memo: HashMap::new(),
        ranks: HashMap::new(),
    };
    Ok(ctx.solve(g.full_mask(), 0))
}

struct ZetaContext<'a> {
    adj: Vec<VertexMask>,
    alpha: &'a [usize],
    // (remaining vertices, next block index) -> partial sum
    memo: HashMap<(VertexMask, usize), IntPolynomial>,
    ranks: HashMap<VertexMask, usize>,
}

impl ZetaContext<'_> {
    fn rank(&mut self, mask: VertexMask) -> usize {
        let adj = &self.adj;
        *self
            .ranks
            .entry(mask)
            .or_insert_with(|| induced_rank(adj, mask))
    }

    fn solve(&mut self, rest: VertexMask, block: usize) -> IntPolynomial {
        if block == self.alpha.len() {
            return IntPolynomial::one();
        }
        if let Some(p) = self.memo.get(&(rest, block)) {
            return p.clone();
        }
        let size = self.alpha[block];
        let mut total = IntPolynomial::zero();
        for chosen in subsets_of_size(rest, size) {
            let r = self.rank(chosen);
            let tail = self.solve(rest & !chosen, block + 1);
            total = &total + &tail.shift(r);
        }
        self.memo.insert((rest, block), total.clone());
        total
    }
}

/// Subsets of `set` with exactly `k` elements.
fn subsets_of_size(set: VertexMask, k: usize) -> Vec<VertexMask> {
    let bits: Vec<VertexMask> = crate::graph::mask_to_vertices(set)
        .into_iter()
        .map(|v| 1u64 << (v - 1))
        .collect();
    let mut out = Vec::new();
    fn rec(bits: &[VertexMask], k: usize, acc: VertexMask, out: &mut Vec<VertexMask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if bits.len() < k {
            return;
        }
        rec(&bits[1..], k - 1, acc | bits[0], out);
        rec(&bits[1..], k, acc, out);
    }
    rec(&bits, k, 0, &mut out);
    out
}

/// `Psi_q(G)` in the monomial basis: partition -> coefficient in `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExpansion {
    weight: usize,
    terms: BTreeMap<IntegerPartition, IntPolynomial>,
}

impl MonomialExpansion {
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Nonzero terms in increasing lexicographic order of the partition.
    pub fn terms(&self) -> &BTreeMap<IntegerPartition, IntPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &IntegerPartition) -> IntPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Principal specialization, aggregated by number of parts.
    pub fn principal_specialization(&self) -> BinomialFormPolynomial {
        let mut terms: BTreeMap<usize, IntPolynomial> = BTreeMap::new();
        for (lambda, c) in &self.terms {
            let (mult, j) = ps_monomial(lambda);
            let slot = terms.entry(j).or_default();
            *slot = &*slot + &c.scale(&mult);
        }
        terms.retain(|_, c| !c.is_zero());
        BinomialFormPolynomial {
            weight: self.weight,
            terms,
        }
    }

    /// JSON object mapping `"[2,1,1]"` to ascending coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| (l.to_string(), serde_json::json!(c.to_decimal_strings())))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Polynomial with every term of the coefficient, no spaces: `4+8q`.
fn compact(p: &IntPolynomial) -> String {
    p.to_string().replace(' ', "")
}

impl fmt::Display for MonomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let nonzero = c.coeffs().iter().filter(|x| !x.is_zero()).count();
                if nonzero > 1 {
                    format!("({})*m{l}", compact(c))
                } else {
                    format!("{}*m{l}", compact(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_budget(g: &Graph, budget: usize) -> Result<()> {
    if g.n() > budget {
        return Err(Error::Budget {
            what: "q-chromatic symmetric function (vertices)",
            limit: budget,
            requested: g.n(),
            hint: "",
        });
    }
    Ok(())
}

pub fn psi_q(g: &Graph) -> Result<MonomialExpansion> {
    psi_q_with_budget(g, DEFAULT_BUDGET)
}

pub fn psi_q_with_budget(g: &Graph, budget: usize) -> Result<MonomialExpansion> {
    check_budget(g, budget)?;
    let terms = integer_partitions(g.n())
        .into_par_iter()
        .map(|lambda| {
            let c = zeta_q_alpha(g, lambda.parts())?;
            Ok((lambda, c))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(MonomialExpansion {
        weight: g.n(),
        terms,
    })
}

/// `ps(m_lambda)(d) = mult * C(d, j)`; returns `(mult, j)`.
pub fn ps_monomial(lambda: &IntegerPartition) -> (BigInt, usize) {
    let j = lambda.len();
    let denom: BigInt = lambda.multiplicities().into_iter().map(factorial).product();
    (factorial(j) / denom, j)
}

/// A polynomial in `d` with coefficients in `q`, written as
/// `sum_j coeff_j(q) * C(d, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFormPolynomial {
    weight: usize,
    terms: BTreeMap<usize, IntPolynomial>,
}

impl BinomialFormPolynomial {
    pub fn terms(&self) -> &BTreeMap<usize, IntPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, j: usize) -> IntPolynomial {
        self.terms.get(&j).cloned().unwrap_or_default()
    }

    /// Substitutes `q -> q_sub` and `d -> d0`; binomials at negative `d0`
    /// use the generalized definition, e.g. `C(-1, j) = (-1)^j`.
    pub fn eval(&self, q_sub: &IntPolynomial, d0: i64) -> IntPolynomial {
        let d0 = BigInt::from(d0);
        self.terms
            .iter()
            .map(|(&j, c)| c.compose(q_sub).scale(&binomial(&d0, j)))
            .sum()
    }

    /// Expansion in powers of `d`: entry `k` is the coefficient of `q^k`
    /// as a polynomial in `d`.
    pub fn to_power_basis(&self) -> Vec<IntPolynomial> {
        let top = self.terms.keys().copied().max().unwrap_or(0);
        let common = factorial(top);
        let q_degree = self
            .terms
            .values()
            .filter_map(IntPolynomial::degree)
            .max()
            .map_or(0, |d| d + 1);
        (0..q_degree)
            .map(|k| {
                let scaled: IntPolynomial = self
                    .terms
                    .iter()
                    .map(|(&j, c)| {
                        falling_factorial(j).scale(&(c.coeff(k) * (&common / factorial(j))))
                    })
                    .sum();
                let coeffs = scaled
                    .coeffs()
                    .iter()
                    .map(|x| {
                        assert!(
                            (x % &common).is_zero(),
                            "chi_q has integral power-basis coefficients"
                        );
                        x / &common
                    })
                    .collect();
                IntPolynomial::from_coeffs(coeffs).in_var(Var::D)
            })
            .collect()
    }

    /// Ascending arrays (over powers of `d`) of ascending `q` coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let binomial: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(j, c)| (j.to_string(), serde_json::json!(c.to_decimal_strings())))
            .collect();
        let power: Vec<Vec<String>> = self
            .to_power_basis()
            .iter()
            .map(IntPolynomial::to_decimal_strings)
            .collect();
        serde_json::json!({ "binomial_basis": binomial, "q_power_coefficients_in_d": power })
    }
}

/// Power-basis form grouped by powers of `q`, e.g. `(d^2 - d) + q*(d)`.
impl fmt::Display for BinomialFormPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .to_power_basis()
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| match k {
                0 => format!("({p})"),
                1 => format!("q*({p})"),
                _ => format!("q^{k}*({p})"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `chi_q(G, d)`, the principal specialization of `Psi_q(G)`.
pub fn chi_q(g: &Graph) -> Result<BinomialFormPolynomial> {
    chi_q_with_budget(g, DEFAULT_BUDGET)
}

pub fn chi_q_with_budget(g: &Graph, budget: usize) -> Result<BinomialFormPolynomial> {
    Ok(psi_q_with_budget(g, budget)?.principal_specialization())
}

pub fn chi_q_eval(g: &Graph, q_sub: &IntPolynomial, d0: i64) -> Result<IntPolynomial> {
    Ok(chi_q(g)?.eval(q_sub, d0))
}
