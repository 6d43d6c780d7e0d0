//! Weak Ore extensions.
//!
//! A `(p,q)`-quasi-derivation `(σ, δ)` on `B` defines
//! `Ψ: k[X]⊗B → B⊗k[X]` by
//!
//! ```text
//! Ψ(1⊗b)       = bq⊗X + bp⊗1
//! Ψ(X⊗b)       = σ(b)q⊗X² + (σ(b) + δ(b)q)⊗X + δ(b)p⊗1
//! Ψ(Xⁿ⁺¹⊗b)    = Ψ(Xⁿ⊗σ(b))X + Ψ(Xⁿ⊗δ(b))
//! ```
//!
//! Polynomials are never truncated: every check runs over monomials up to a
//! degree bound `N`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{int, vec_add, vec_is_zero, vec_scale, zero_vec, Mat, Scalar};
use crate::report::Report;
use num_traits::Zero;

/// Degree bound used when none is given: `WREATHLAB_DEFAULT_N`, else 6.
pub fn default_degree() -> usize {
    std::env::var("WREATHLAB_DEFAULT_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQQuasiDerivation {
    pub b: Algebra,
    pub p: Vec<Scalar>,
    pub q: Vec<Scalar>,
    pub sigma: Mat,
    pub delta: Mat,
}

impl PQQuasiDerivation {
    pub fn new(b: Algebra, p: Vec<Scalar>, q: Vec<Scalar>, sigma: Mat, delta: Mat) -> Result<Self> {
        let d = b.dim();
        if p.len() != d || q.len() != d || sigma.shape() != (d, d) || delta.shape() != (d, d) {
            return Err(Error::Shape(format!(
                "p, q need {d} coordinates and σ, δ must be {d}x{d}"
            )));
        }
        Ok(PQQuasiDerivation { b, p, q, sigma, delta })
    }

    /// The `(1,0)` case with `σ = id`, `δ = 0`.
    pub fn classical_trivial(b: &Algebra) -> Self {
        let d = b.dim();
        PQQuasiDerivation {
            p: b.one(),
            q: zero_vec(d),
            sigma: b.id(),
            delta: Mat::zeros(d, d),
            b: b.clone(),
        }
    }

    /// Upper triangular 2×2 matrices with `p = e11`, `q = e12`,
    /// `σ(ae11 + be12 + ce22) = ae11` and `δ(ae11 + be12 + ce22) = ae12`.
    pub fn upper_triangular_example() -> Self {
        PQQuasiDerivation {
            b: Algebra::upper_triangular(),
            p: vec![int(1), int(0), int(0)],
            q: vec![int(0), int(1), int(0)],
            sigma: Mat::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
            delta: Mat::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]),
        }
    }

    fn dim(&self) -> usize {
        self.b.dim()
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.b.mul(x, y)
    }
}

/// Every identity required of `p`, `q`, `σ` and `δ`, on all basis inputs.
pub fn validate_pqqd(d: &PQQuasiDerivation) -> Report {
    let b = &d.b;
    let n = d.dim();
    let (p, q) = (&d.p, &d.q);
    let mut r = Report::new("(p,q)-quasi-derivation");
    r.absorb("B", b.validate());
    r.check_values("p idempotent", "p² = p", vec![], d.mul(p, p), p.clone());
    r.check_values("q square zero", "q² = 0", vec![], d.mul(q, q), zero_vec(n));
    r.check_values("pq", "pq = q", vec![], d.mul(p, q), q.clone());
    r.check_values("qp", "qp = 0", vec![], d.mul(q, p), zero_vec(n));
    r.check_all(
        "p absorbs",
        "pbp = bp",
        (0..n).map(|i| {
            let bp = d.mul(&b.basis_elem(i), p);
            (vec![i], d.mul(p, &bp), bp)
        }),
    );
    let (s, dl) = (&d.sigma, &d.delta);
    let pairs = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
    r.check_all(
        "sigma multiplicative",
        "σ(bb′) = σ(b)σ(b′)",
        pairs().map(|(i, j)| {
            let (x, y) = (b.basis_elem(i), b.basis_elem(j));
            (vec![i, j], s.apply(&d.mul(&x, &y)), d.mul(&s.apply(&x), &s.apply(&y)))
        }),
    );
    r.check_values("sigma of unit", "σ(1) = p", vec![], s.apply(&b.one()), p.clone());
    r.check_values("sigma of p", "σ(p) = p", vec![], s.apply(p), p.clone());
    r.check_values("sigma of q", "σ(q) = 0", vec![], s.apply(q), zero_vec(n));
    r.check_all(
        "delta twisted Leibniz",
        "δ(bb′) = σ(b)δ(b′) + δ(b)b′p",
        pairs().map(|(i, j)| {
            let (x, y) = (b.basis_elem(i), b.basis_elem(j));
            let rhs = vec_add(
                &d.mul(&s.apply(&x), &dl.apply(&y)),
                &d.mul(&d.mul(&dl.apply(&x), &y), p),
            );
            (vec![i, j], dl.apply(&d.mul(&x, &y)), rhs)
        }),
    );
    r.check_values("delta of unit", "δ(1) = q", vec![], dl.apply(&b.one()), q.clone());
    r.check_values("delta of p", "δ(p) = q", vec![], dl.apply(p), q.clone());
    r.check_values("delta of q", "δ(q) = 0", vec![], dl.apply(q), zero_vec(n));
    r
}

/// True for a classical quasi-derivation, `(p, q) = (1, 0)`.
pub fn is_classical(d: &PQQuasiDerivation) -> bool {
    d.p == d.b.one() && vec_is_zero(&d.q)
}

/// `Σ bₙ⊗Xⁿ ∈ B⊗k[X]`, coefficient of `Xⁿ` at index `n`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrePoly {
    dim: usize,
    coeffs: Vec<Vec<Scalar>>,
}

impl OrePoly {
    pub fn zero(dim: usize) -> Self {
        OrePoly { dim, coeffs: vec![] }
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(c) = coeffs.iter().find(|c| c.len() != dim) {
            return Err(Error::Shape(format!(
                "coefficient has {} coordinates, B has dimension {dim}",
                c.len()
            )));
        }
        Ok(OrePoly { dim, coeffs }.trimmed())
    }

    /// `b⊗Xⁿ`.
    pub fn monomial(b: Vec<Scalar>, n: usize) -> Self {
        let dim = b.len();
        let mut coeffs = vec![zero_vec(dim); n];
        coeffs.push(b);
        OrePoly { dim, coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| vec_is_zero(c)) {
            self.coeffs.pop();
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> Vec<Scalar> {
        self.coeffs.get(n).cloned().unwrap_or_else(|| zero_vec(self.dim))
    }

    pub fn add(&self, other: &OrePoly) -> OrePoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|n| vec_add(&self.coeff(n), &other.coeff(n))).collect();
        OrePoly { dim: self.dim, coeffs }.trimmed()
    }

    pub fn scale(&self, c: &Scalar) -> OrePoly {
        let coeffs = self.coeffs.iter().map(|b| vec_scale(c, b)).collect();
        OrePoly { dim: self.dim, coeffs }.trimmed()
    }

    /// Right multiplication by `Xᵐ`.
    pub fn shift(&self, m: usize) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![zero_vec(self.dim); m];
        coeffs.extend(self.coeffs.iter().cloned());
        OrePoly { dim: self.dim, coeffs }
    }

    /// Left multiplication of every coefficient by `b`.
    pub fn left_mul(&self, alg: &Algebra, b: &[Scalar]) -> OrePoly {
        let coeffs = self.coeffs.iter().map(|c| alg.mul(b, c)).collect();
        OrePoly { dim: self.dim, coeffs }.trimmed()
    }

    /// Coordinates in `B⊗k[X]_{≤len-1}`, index `n·dim B + i`.
    pub fn flatten(&self, len: usize) -> Vec<Scalar> {
        (0..len).flat_map(|n| self.coeff(n)).collect()
    }
}

/// `Ψ(Xⁿ⊗eᵢ)` for all `n ≤ max` and basis elements `eᵢ`.
#[derive(Clone, Debug)]
pub struct PsiTable {
    rows: Vec<Vec<OrePoly>>,
}

impl PsiTable {
    pub fn new(d: &PQQuasiDerivation, max: usize) -> Self {
        let dim = d.dim();
        let basis: Vec<_> = (0..dim).map(|i| d.b.basis_elem(i)).collect();
        let zeroth: Vec<OrePoly> = basis
            .iter()
            .map(|b| OrePoly::from_coeffs(dim, vec![d.mul(b, &d.p), d.mul(b, &d.q)]).unwrap())
            .collect();
        let mut rows = vec![zeroth];
        if max >= 1 {
            let first = basis
                .iter()
                .map(|b| {
                    let (s, dl) = (d.sigma.apply(b), d.delta.apply(b));
                    let coeffs = vec![d.mul(&dl, &d.p), vec_add(&s, &d.mul(&dl, &d.q)), d.mul(&s, &d.q)];
                    OrePoly::from_coeffs(dim, coeffs).unwrap()
                })
                .collect();
            rows.push(first);
        }
        for n in 2..=max {
            let prev = &rows[n - 1];
            let next = basis
                .iter()
                .map(|b| {
                    let via = |m: &Mat| combine(prev, &m.apply(b), dim);
                    via(&d.sigma).shift(1).add(&via(&d.delta))
                })
                .collect();
            rows.push(next);
        }
        PsiTable { rows }
    }

    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// `Ψ(Xⁿ⊗b)`; panics if `n` exceeds the table.
    pub fn psi(&self, n: usize, b: &[Scalar]) -> OrePoly {
        combine(&self.rows[n], b, b.len())
    }
}

fn combine(row: &[OrePoly], b: &[Scalar], dim: usize) -> OrePoly {
    row.iter()
        .zip(b)
        .filter(|(_, c)| !c.is_zero())
        .fold(OrePoly::zero(dim), |acc, (p, c)| acc.add(&p.scale(c)))
}

/// `Ψ(Xⁿ⊗b)`.
pub fn ore_psi(d: &PQQuasiDerivation, n: usize, b: &[Scalar]) -> OrePoly {
    PsiTable::new(d, n).psi(n, b)
}

/// `Σ cₖ Ψ(Xᵏ⊗b)` for `f = Σ cₖ⊗Xᵏ`.
fn left_action(d: &PQQuasiDerivation, t: &PsiTable, f: &OrePoly, b: &[Scalar]) -> OrePoly {
    f.coeffs()
        .iter()
        .enumerate()
        .fold(OrePoly::zero(d.dim()), |acc, (k, c)| {
            acc.add(&t.psi(k, b).left_mul(&d.b, c))
        })
}

/// `(Σ b′ₘ⊗Xᵐ)(Σ bₙ⊗Xⁿ) = Σ b′ₘ Ψ(Xᵐ⊗bₙ) Xⁿ`.
pub fn ore_wreath_mult(d: &PQQuasiDerivation, f: &OrePoly, g: &OrePoly) -> OrePoly {
    let t = PsiTable::new(d, f.degree().unwrap_or(0));
    mult_with(d, &t, f, g)
}

fn mult_with(d: &PQQuasiDerivation, t: &PsiTable, f: &OrePoly, g: &OrePoly) -> OrePoly {
    g.coeffs()
        .iter()
        .enumerate()
        .fold(OrePoly::zero(d.dim()), |acc, (n, b)| {
            acc.add(&left_action(d, t, f, b).shift(n))
        })
}

/// `Ψ̄(b⊗Xⁿ) = bΨ(Xⁿ⊗1)`, extended linearly.
fn psibar(d: &PQQuasiDerivation, t: &PsiTable, f: &OrePoly) -> OrePoly {
    left_action(d, t, f, &d.b.one())
}

fn same(f: &OrePoly, g: &OrePoly) -> (Vec<Scalar>, Vec<Scalar>) {
    let len = f.coeffs().len().max(g.coeffs().len());
    (f.flatten(len), g.flatten(len))
}

/// The four bullet identities, the degree bound and idempotence of `Ψ̄`,
/// for basis `b, b′` and `n, m ≤ max_n`.
pub fn ore_check_properties(d: &PQQuasiDerivation, max_n: usize) -> Report {
    let dim = d.dim();
    let t = PsiTable::new(d, 2 * max_n + 1);
    let basis: Vec<_> = (0..dim).map(|i| d.b.basis_elem(i)).collect();
    let one = d.b.one();
    let degrees = || 0..=max_n;
    let by_basis = || degrees().flat_map(move |n| (0..dim).map(move |i| (n, i)));
    let mut r = Report::new("weak Ore extension");

    r.check_all(
        "absorbs p",
        "Ψ(Xⁿ⊗bp) = Ψ(Xⁿ⊗b)",
        by_basis().map(|(n, i)| {
            let (l, rr) = same(&t.psi(n, &d.mul(&basis[i], &d.p)), &t.psi(n, &basis[i]));
            (vec![n, i], l, rr)
        }),
    );
    r.check_all(
        "kills q",
        "Ψ(Xⁿ⊗bq) = 0",
        by_basis().map(|(n, i)| {
            let l = t.psi(n, &d.mul(&basis[i], &d.q));
            (
                vec![n, i],
                l.flatten(l.coeffs().len()),
                zero_vec(l.coeffs().len() * dim),
            )
        }),
    );
    r.check_all(
        "unit coefficients",
        "bΨ(Xⁿ⊗1) = Ψ(1⊗b)Xⁿ",
        by_basis().map(|(n, i)| {
            let (l, rr) = same(&t.psi(n, &one).left_mul(&d.b, &basis[i]), &t.psi(0, &basis[i]).shift(n));
            (vec![n, i], l, rr)
        }),
    );
    r.check_all(
        "multiplicative in k[X]",
        "(B⊗μ)(Ψ⊗k[X])(k[X]⊗Ψ)(Xⁿ⊗Xᵐ⊗b) = Ψ(Xⁿ⁺ᵐ⊗b)",
        by_basis()
            .flat_map(|(n, i)| degrees().map(move |m| (n, m, i)))
            .map(|(n, m, i)| {
                let inner = t.psi(m, &basis[i]);
                let lhs = inner
                    .coeffs()
                    .iter()
                    .enumerate()
                    .fold(OrePoly::zero(dim), |acc, (k, c)| acc.add(&t.psi(n, c).shift(k)));
                let (l, rr) = same(&lhs, &t.psi(n + m, &basis[i]));
                (vec![n, m, i], l, rr)
            }),
    );
    r.check_all(
        "multiplicative in B",
        "(μ⊗k[X])(B⊗Ψ)(Ψ⊗B)(Xⁿ⊗b⊗b′) = Ψ(Xⁿ⊗bb′)",
        by_basis()
            .flat_map(|(n, i)| (0..dim).map(move |j| (n, i, j)))
            .map(|(n, i, j)| {
                let lhs = left_action(d, &t, &t.psi(n, &basis[i]), &basis[j]);
                let (l, rr) = same(&lhs, &t.psi(n, &d.mul(&basis[i], &basis[j])));
                (vec![n, i, j], l, rr)
            }),
    );
    let bad_degree = by_basis().find(|&(n, i)| t.psi(n, &basis[i]).degree().is_some_and(|g| g > n + 1));
    r.check_condition(
        "degree bound",
        "deg Ψ(Xⁿ⊗b) ≤ n+1",
        bad_degree.is_none(),
        bad_degree.map(|(n, i)| vec![n, i]).unwrap_or_default(),
    );
    r.check_all(
        "psibar idempotent",
        "Ψ̄Ψ̄(b⊗Xⁿ) = Ψ̄(b⊗Xⁿ)",
        by_basis().map(|(n, i)| {
            let once = psibar(d, &t, &OrePoly::monomial(basis[i].clone(), n));
            let (l, rr) = same(&psibar(d, &t, &once), &once);
            (vec![n, i], l, rr)
        }),
    );
    r
}

/// `(Ψ⊗Ψ)(1⊗b⊗Xᵏ⊗1)` summed over `f = Σ bₖ⊗Xᵏ`, as coordinates indexed
/// by `(k, l)` pairs of exponents with `B⊗B` coefficients.
fn spread(d: &PQQuasiDerivation, t: &PsiTable, f: &OrePoly, len: usize) -> Vec<Scalar> {
    let dim = d.dim();
    let one = d.b.one();
    let mut out = zero_vec(len * len * dim * dim);
    for (k, c) in f.coeffs().iter().enumerate() {
        let left = t.psi(0, c);
        let right = t.psi(k, &one);
        for (i, x) in left.coeffs().iter().enumerate() {
            for (j, y) in right.coeffs().iter().enumerate() {
                let block = crate::linalg::vec_kron(x, y);
                let base = (i * len + j) * dim * dim;
                for (o, v) in out[base..base + dim * dim].iter_mut().zip(block) {
                    *o += v;
                }
            }
        }
    }
    out
}

/// Both strictness diagrams of the refinement, on `Xⁿ` for `n ≤ max_n` and
/// on basis elements of `B`.
pub fn ore_strictness(d: &PQQuasiDerivation, max_n: usize) -> Report {
    let dim = d.dim();
    let t = PsiTable::new(d, max_n + 1);
    let one = d.b.one();
    let len = max_n + 3;
    let mut r = Report::new("weak Ore strictness");
    r.check_all(
        "on k[X]",
        "(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(A⊗η) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(η⊗A)",
        (0..=max_n).map(|n| {
            let lhs = spread(d, &t, &t.psi(n, &one), len);
            let rhs = spread(d, &t, &OrePoly::monomial(one.clone(), n), len);
            (vec![n], lhs, rhs)
        }),
    );
    r.check_all(
        "on B",
        "(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(η⊗B) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(B⊗η)",
        (0..dim).map(|i| {
            let b = d.b.basis_elem(i);
            let lhs = spread(d, &t, &t.psi(0, &b), len);
            let rhs = spread(d, &t, &OrePoly::monomial(b, 0), len);
            (vec![i], lhs, rhs)
        }),
    );
    r
}

/// Associativity of [`ore_wreath_mult`] on all triples `b⊗Xⁿ` with basis `b`
/// and `n ≤ max_n`.
pub fn ore_associativity(d: &PQQuasiDerivation, max_n: usize) -> Report {
    let t = PsiTable::new(d, 3 * max_n + 2);
    let monos: Vec<(Vec<usize>, OrePoly)> = (0..=max_n)
        .flat_map(|n| (0..d.dim()).map(move |i| (n, i)))
        .map(|(n, i)| (vec![n, i], OrePoly::monomial(d.b.basis_elem(i), n)))
        .collect();
    let mut r = Report::new("weak Ore multiplication");
    r.check_all(
        "associative",
        "(fg)h = f(gh)",
        monos
            .iter()
            .flat_map(|f| monos.iter().map(move |g| (f, g)))
            .flat_map(|(f, g)| {
                let fg = mult_with(d, &t, &f.1, &g.1);
                let t = &t;
                monos.iter().map(move |h| {
                    let (l, rr) = same(
                        &mult_with(d, t, &fg, &h.1),
                        &mult_with(d, t, &f.1, &mult_with(d, t, &g.1, &h.1)),
                    );
                    ([f.0.clone(), g.0.clone(), h.0.clone()].concat(), l, rr)
                })
            }),
    );
    r
}

/// Generators of `B̃` and the powers of `X̃ = Ψ(X⊗1)`.
#[derive(Clone, Debug)]
pub struct TildeBasis {
    /// A basis of `B̃ = {b(q⊗X + p⊗1)}`.
    pub b_tilde: Vec<OrePoly>,
    /// `Ψ(Xⁿ⊗1)` for `n ≤ N`.
    pub powers: Vec<OrePoly>,
    pub report: Report,
}

fn independent(polys: &[OrePoly], len: usize) -> Vec<usize> {
    if polys.is_empty() {
        return vec![];
    }
    let dim = polys[0].dim();
    let cols: Vec<_> = polys.iter().map(|p| p.flatten(len)).collect();
    Mat::from_cols(len * dim, &cols).pivot_columns()
}

fn rank(polys: &[OrePoly], len: usize) -> usize {
    independent(polys, len).len()
}

/// Checks the Ore characterization for `B̃` and `X̃` up to degree `max_n`:
/// `B̃` is a subalgebra, `X̃ⁿ = Ψ(Xⁿ⊗1)`, the powers are independent over `B̃`
/// and span the image of `Ψ̄` as a left `B̃`-module, and `X̃B̃ ⊆ B̃X̃ + B̃`.
pub fn ore_tilde_basis(d: &PQQuasiDerivation, max_n: usize) -> TildeBasis {
    let dim = d.dim();
    let t = PsiTable::new(d, max_n + 1);
    let one = d.b.one();
    let len = max_n + 3;
    let unit = t.psi(0, &one);
    let gens: Vec<OrePoly> = (0..dim).map(|i| unit.left_mul(&d.b, &d.b.basis_elem(i))).collect();
    let b_tilde: Vec<OrePoly> = independent(&gens, len).into_iter().map(|i| gens[i].clone()).collect();
    let powers: Vec<OrePoly> = (0..=max_n).map(|n| t.psi(n, &one)).collect();
    let mut r = Report::new("Ore characterization");

    let products: Vec<OrePoly> = b_tilde
        .iter()
        .flat_map(|x| b_tilde.iter().map(|y| mult_with(d, &t, x, y)))
        .collect();
    let mut closed = b_tilde.clone();
    closed.extend(products);
    r.check_condition("subalgebra", "B̃B̃ ⊆ B̃", rank(&closed, len) == b_tilde.len(), vec![]);
    r.check_condition(
        "contains unit",
        "Ψ(1⊗1) ∈ B̃",
        rank(&[b_tilde.clone(), vec![unit.clone()]].concat(), len) == b_tilde.len(),
        vec![],
    );

    let x = t.psi(1, &one);
    let mut power = unit.clone();
    r.check_all(
        "powers",
        "Ψ(X⊗1)ⁿ = Ψ(Xⁿ⊗1)",
        (0..=max_n.min(5)).map(|n| {
            if n > 0 {
                power = mult_with(d, &t, &power, &x);
            }
            let (l, rr) = same(&power, &powers[n]);
            (vec![n], l, rr)
        }),
    );

    let spanned: Vec<OrePoly> = powers
        .iter()
        .flat_map(|p| b_tilde.iter().map(move |g| (g, p)))
        .map(|(g, p)| mult_with(d, &t, g, p))
        .collect();
    let wide = 2 * max_n + 4;
    r.check_condition(
        "independent powers",
        "Σ b̃ₙ Ψ(Xⁿ⊗1) = 0 only for b̃ₙ = 0",
        rank(&spanned, wide) == spanned.len(),
        vec![rank(&spanned, wide), spanned.len()],
    );
    let image: Vec<OrePoly> = (0..=max_n)
        .flat_map(|n| (0..dim).map(move |i| (n, i)))
        .map(|(n, i)| psibar(d, &t, &OrePoly::monomial(d.b.basis_elem(i), n)))
        .collect();
    let both = [spanned.clone(), image.clone()].concat();
    r.check_condition(
        "powers span",
        "B̃·{Ψ(Xⁿ⊗1)} spans Ψ̄(B⊗k[X]) in each degree",
        rank(&both, wide) == rank(&spanned, wide) && rank(&both, wide) == rank(&image, wide),
        vec![],
    );
    let linear: Vec<OrePoly> = b_tilde
        .iter()
        .flat_map(|g| [mult_with(d, &t, g, &x), g.clone()])
        .collect();
    let r0 = rank(&linear, wide);
    let bad = b_tilde.iter().position(|g| {
        let mut probe = linear.clone();
        probe.push(mult_with(d, &t, &x, g));
        rank(&probe, wide) != r0
    });
    r.check_condition(
        "commutation",
        "X̃B̃ ⊆ B̃X̃ + B̃",
        bad.is_none(),
        bad.map(|i| vec![i]).unwrap_or_default(),
    );
    TildeBasis {
        b_tilde,
        powers,
        report: r,
    }
}
