//! Separable Frobenius algebras `R`, the splitting of `M⊗N → M⊗_R N` by
//! `m⊗n ↦ Σ m·eᵢ⊗fᵢ·n`, and the weak distributive law of `k`-algebras
//! induced by a distributive law over `R`.

use crate::algebra::{check_isomorphism, is_algebra_hom, Algebra};
use crate::error::{Error, Result};
use crate::factorization::{validate_fact, wdl_of_fact, BilinFact};
use crate::linalg::{vec_kron, Mat, Scalar};
use crate::report::Report;
use crate::wdl::{check_wdl, psibar, weak_wreath, Wdl};

/// A Frobenius functional `ψ` together with its basis element `Σ eᵢ⊗fᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusStructure {
    pub r: Algebra,
    /// `ψ: R → k` as a `1 × n` matrix.
    pub functional: Mat,
    /// `Σ eᵢ⊗fᵢ` as a vector of `R⊗R`.
    pub element: Vec<Scalar>,
}

impl FrobeniusStructure {
    pub fn from_pairs(r: Algebra, functional: Mat, pairs: &[(Vec<Scalar>, Vec<Scalar>)]) -> Self {
        let n = r.dim();
        let mut element = vec![Scalar::from_integer(0.into()); n * n];
        for (e, f) in pairs {
            for (x, y) in element.iter_mut().zip(vec_kron(e, f)) {
                *x += y;
            }
        }
        FrobeniusStructure { r, functional, element }
    }

    /// `k^n` with `ψ(pᵢ) = 1` and basis `Σ pᵢ⊗pᵢ`.
    pub fn diagonal(n: usize) -> Self {
        let r = Algebra::diagonal(n);
        let pairs: Vec<_> = (0..n).map(|i| (r.basis_elem(i), r.basis_elem(i))).collect();
        let functional = Mat::from_fn(1, n, |_, _| Scalar::from_integer(1.into()));
        FrobeniusStructure::from_pairs(r, functional, &pairs)
    }

    /// `k` with `ψ = id` and basis `1⊗1`.
    pub fn ground() -> Self {
        let k = Algebra::ground();
        FrobeniusStructure {
            functional: k.id(),
            element: k.one(),
            r: k,
        }
    }

    fn element_col(&self) -> Mat {
        Mat::column(&self.element)
    }
}

/// Both Frobenius identities on every basis element and separability.
pub fn validate_frobenius(s: &FrobeniusStructure) -> Report {
    let mut rep = Report::new("separable Frobenius structure");
    let n = s.r.dim();
    if s.functional.shape() != (1, n) || s.element.len() != n * n {
        rep.check_condition("shape", "ψ: R → k and Σ eᵢ⊗fᵢ ∈ R⊗R", false, vec![]);
        return rep;
    }
    let id = s.r.id();
    let x = s.element_col();
    let pair = s.functional.compose(s.r.mult()).unwrap();
    let left = Mat::chain(&[&id.kron(&x), &pair.kron(&id)]).unwrap();
    rep.check_maps("dual basis (left)", "Σ ψ(r eᵢ) fᵢ = r", &left, &id, &[n]);
    let right = Mat::chain(&[&x.kron(&id), &id.kron(&pair)]).unwrap();
    rep.check_maps("dual basis (right)", "Σ eᵢ ψ(fᵢ r) = r", &right, &id, &[n]);
    rep.check_maps(
        "separable",
        "Σ eᵢ fᵢ = 1",
        &s.r.mult().compose(&x).unwrap(),
        s.r.unit(),
        &[1],
    );
    rep
}

/// A module over `R`: for a right module `action: M⊗R → M`, for a left
/// module `action: R⊗M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub dim: usize,
    pub action: Mat,
}

impl Module {
    /// `A` as a right `R`-module through `a·r = a η(r)`.
    pub fn right_via(a: &Algebra, eta: &Mat) -> Self {
        Module {
            dim: a.dim(),
            action: a.mult().compose(&a.id().kron(eta)).unwrap(),
        }
    }

    /// `A` as a left `R`-module through `r·a = η(r) a`.
    pub fn left_via(a: &Algebra, eta: &Mat) -> Self {
        Module {
            dim: a.dim(),
            action: a.mult().compose(&eta.kron(&a.id())).unwrap(),
        }
    }
}

pub fn validate_right_module(m: &Module, r: &Algebra) -> Report {
    let mut rep = Report::new("right module");
    let (d, n) = (m.dim, r.dim());
    if m.action.shape() != (d, d * n) {
        rep.check_condition("shape", "M⊗R → M", false, vec![]);
        return rep;
    }
    let im = Mat::identity(d);
    let lhs = m.action.compose(&m.action.kron(&r.id())).unwrap();
    let rhs = m.action.compose(&im.kron(r.mult())).unwrap();
    rep.check_maps("associative", "(m·r)·s = m·(rs)", &lhs, &rhs, &[d, n, n]);
    let unit = m.action.compose(&im.kron(r.unit())).unwrap();
    rep.check_maps("unital", "m·1 = m", &unit, &im, &[d]);
    rep
}

pub fn validate_left_module(m: &Module, r: &Algebra) -> Report {
    let mut rep = Report::new("left module");
    let (d, n) = (m.dim, r.dim());
    if m.action.shape() != (d, n * d) {
        rep.check_condition("shape", "R⊗M → M", false, vec![]);
        return rep;
    }
    let im = Mat::identity(d);
    let lhs = m.action.compose(&r.id().kron(&m.action)).unwrap();
    let rhs = m.action.compose(&r.mult().kron(&im)).unwrap();
    rep.check_maps("associative", "r·(s·m) = (rs)·m", &lhs, &rhs, &[n, n, d]);
    let unit = m.action.compose(&r.unit().kron(&im)).unwrap();
    rep.check_maps("unital", "1·m = m", &unit, &im, &[d]);
    rep
}

/// `M⊗_R N` in coordinates, with the canonical projection from `M⊗N` and
/// the Frobenius section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOverR {
    pub dim: usize,
    /// Positions in `M⊗N` of the basis vectors representing the quotient basis.
    pub basis: Vec<usize>,
    pub proj: Mat,
    pub incl: Mat,
}

impl TensorOverR {
    /// `incl ∘ proj`, the Frobenius idempotent on `M⊗N`.
    pub fn idempotent(&self) -> Mat {
        self.incl.compose(&self.proj).unwrap()
    }
}

pub fn tensor_over_r(m: &Module, n: &Module, s: &FrobeniusStructure) -> Result<TensorOverR> {
    let r = &s.r;
    let mut pre = Report::new("tensor over R");
    pre.absorb("M", validate_right_module(m, r));
    pre.absorb("N", validate_left_module(n, r));
    pre.absorb("R", validate_frobenius(s));
    pre.into_result("tensor over R")?;

    let (dm, dn) = (m.dim, n.dim);
    let (im, in_) = (Mat::identity(dm), Mat::identity(dn));
    // m·r⊗n − m⊗r·n on M⊗R⊗N.
    let relations = m.action.kron(&in_).sub(&im.kron(&n.action))?;
    let total = dm * dn;
    let rel_basis = relations.select_cols(&relations.pivot_columns());
    let k = rel_basis.cols();
    let ext = rel_basis.hstack(&Mat::identity(total))?;
    let basis: Vec<usize> = ext
        .pivot_columns()
        .into_iter()
        .filter(|&c| c >= k)
        .map(|c| c - k)
        .collect();
    let complement = Mat::identity(total).select_cols(&basis);
    let square = rel_basis.hstack(&complement)?;
    let coords = square.solve(&Mat::identity(total))?;
    let q = basis.len();
    let proj = coords.select_rows(&(k..k + q).collect::<Vec<_>>());

    let section = Mat::chain(&[
        &Mat::kron_all(&[&im, &Mat::column(&s.element), &in_]),
        &m.action.kron(&n.action),
    ])?;
    if !section.compose(&relations)?.is_zero() {
        return Err(Error::IllDefinedSection);
    }
    let incl = section.compose(&complement)?;
    let mut post = Report::new("tensor over R");
    post.check_maps("section", "π ι = id", &proj.compose(&incl)?, &Mat::identity(q), &[q]);
    post.check_maps(
        "idempotent",
        "ι π = Σ m·eᵢ⊗fᵢ·n",
        &incl.compose(&proj)?,
        &section,
        &[dm, dn],
    );
    post.into_result("tensor over R")?;
    Ok(TensorOverR {
        dim: q,
        basis,
        proj,
        incl,
    })
}

/// The weak law induced from an `R`-distributive law, with every identity
/// relating the two certified.
#[derive(Clone, Debug)]
pub struct SfLaw {
    pub frobenius: FrobeniusStructure,
    pub ab: TensorOverR,
    pub ba: TensorOverR,
    /// `Φ: A⊗_R B → B⊗_R A` in quotient coordinates.
    pub phi: Mat,
    /// `B⊗_R A` with multiplication induced by `Φ`.
    pub algebra: Algebra,
    pub fact: BilinFact,
    pub wdl: Wdl,
    pub report: Report,
}

/// The `R`-law `π_BA Ψ ι_AB` obtained by projecting a `k`-linear map.
pub fn project_law(ab: &TensorOverR, ba: &TensorOverR, psi: &Mat) -> Mat {
    Mat::chain(&[&ab.incl, psi, &ba.proj]).unwrap()
}

/// Distributive law diagrams over `R`, evaluated on representatives in
/// the `k`-tensor products and projected to `B⊗_R A`.
fn r_law_diagrams(a: &Algebra, b: &Algebra, eta_a: &Mat, eta_b: &Mat, lift: &Mat, pba: &Mat, dr: usize) -> Report {
    let (ia, ib, ir) = (a.id(), b.id(), Mat::identity(dr));
    let (da, db) = (a.dim(), b.dim());
    let mut rep = Report::new("distributive law over R");
    let with = |maps: &[&Mat]| {
        let mut v: Vec<&Mat> = maps.to_vec();
        v.push(pba);
        Mat::chain(&v).unwrap()
    };
    rep.check_maps(
        "multiplicative in A",
        "Φ(μ⊗_R B) = (B⊗_R μ)(Φ⊗_R A)(A⊗_R Φ)",
        &with(&[&a.mult().kron(&ib), lift]),
        &with(&[&ia.kron(lift), &lift.kron(&ia), &ib.kron(a.mult())]),
        &[da, da, db],
    );
    rep.check_maps(
        "multiplicative in B",
        "Φ(A⊗_R μ) = (μ⊗_R A)(B⊗_R Φ)(Φ⊗_R B)",
        &with(&[&ia.kron(b.mult()), lift]),
        &with(&[&lift.kron(&ib), &ib.kron(lift), &b.mult().kron(&ia)]),
        &[da, db, db],
    );
    rep.check_maps(
        "unital in A",
        "Φ(η⊗_R B) = B⊗_R η",
        &with(&[&a.unit().kron(&ib), lift]),
        &with(&[&ib.kron(a.unit())]),
        &[db],
    );
    rep.check_maps(
        "unital in B",
        "Φ(A⊗_R η) = η⊗_R A",
        &with(&[&ia.kron(b.unit()), lift]),
        &with(&[&b.unit().kron(&ia)]),
        &[da],
    );
    let left_a = a.mult().compose(&eta_a.kron(&ia)).unwrap();
    let left_b = b.mult().compose(&eta_b.kron(&ib)).unwrap();
    rep.check_maps(
        "left R-linear",
        "Φ(r·x) = r·Φ(x)",
        &with(&[&left_a.kron(&ib), lift]),
        &with(&[&ir.kron(lift), &left_b.kron(&ia)]),
        &[dr, da, db],
    );
    let right_a = a.mult().compose(&ia.kron(eta_a)).unwrap();
    let right_b = b.mult().compose(&ib.kron(eta_b)).unwrap();
    rep.check_maps(
        "right R-linear",
        "Φ(x·r) = Φ(x)·r",
        &with(&[&ia.kron(&right_b), lift]),
        &with(&[&lift.kron(&ir), &ib.kron(&right_a)]),
        &[da, db, dr],
    );
    rep
}

/// `Ψ = ι Φ π: A⊗B → B⊗A` for an `R`-distributive law `Φ` in quotient
/// coordinates, with `A`, `B` made `R`-rings by `eta_a`, `eta_b`.
pub fn sf_weak_dl(
    a: &Algebra,
    b: &Algebra,
    eta_a: &Mat,
    eta_b: &Mat,
    phi: &Mat,
    s: &FrobeniusStructure,
) -> Result<SfLaw> {
    let mut pre = Report::new("R-rings");
    pre.absorb("eta_A", is_algebra_hom(eta_a, &s.r, a));
    pre.absorb("eta_B", is_algebra_hom(eta_b, &s.r, b));
    pre.into_result("R-rings")?;
    let ab = tensor_over_r(&Module::right_via(a, eta_a), &Module::left_via(b, eta_b), s)?;
    let ba = tensor_over_r(&Module::right_via(b, eta_b), &Module::left_via(a, eta_a), s)?;
    if phi.shape() != (ba.dim, ab.dim) {
        return Err(Error::Shape(format!(
            "Φ: A⊗_R B → B⊗_R A must be {}x{}, got {:?}",
            ba.dim,
            ab.dim,
            phi.shape()
        )));
    }
    let psi = Mat::chain(&[&ab.proj, phi, &ba.incl])?;
    let (da, db) = (a.dim(), b.dim());
    let mut report = Report::new("law over a separable Frobenius algebra");
    report.absorb("R-law", r_law_diagrams(a, b, eta_a, eta_b, &psi, &ba.proj, s.r.dim()));
    report = report.into_result("distributive law over R")?;

    let w = Wdl::new(a.clone(), b.clone(), psi)?;
    report.absorb("law", check_wdl(&w.a, &w.b, &w.psi));
    let pb = psibar(&w)?;
    report.check_maps("psibar splits", "Ψ̄ = ι π", &pb, &ba.idempotent(), &[db, da]);
    report.check_condition(
        "rank",
        "rank Ψ̄ = dim B⊗_R A",
        pb.rank() == ba.dim,
        vec![pb.rank(), ba.dim],
    );

    let mu = b
        .mult()
        .kron(a.mult())
        .compose(&Mat::kron_all(&[&b.id(), &w.psi, &a.id()]))?;
    let mult = Mat::chain(&[&ba.incl.kron(&ba.incl), &mu, &ba.proj])?;
    let unit = ba.proj.compose(&b.unit().kron(a.unit()))?;
    let names = ba
        .basis
        .iter()
        .map(|&c| format!("{}⊗_R{}", b.basis()[c / da], a.basis()[c % da]))
        .collect();
    let algebra = Algebra::new(names, mult, unit)?;
    report.absorb("B⊗_R A", algebra.validate());
    let fact = BilinFact::new(
        a.clone(),
        b.clone(),
        algebra.clone(),
        ba.proj.compose(&b.unit().kron(&a.id()))?,
        ba.proj.compose(&b.id().kron(a.unit()))?,
        ba.incl.clone(),
    )?;
    report.absorb("factorization", validate_fact(&fact));
    report = report.into_result("law over a separable Frobenius algebra")?;
    report.check_maps(
        "law of the factorization",
        "ι μ(α⊗β) = Ψ",
        &wdl_of_fact(&fact)?.psi,
        &w.psi,
        &[da, db],
    );
    let wreath = weak_wreath(&w)?;
    let to = wreath.proj().compose(&ba.incl)?;
    let from = ba.proj.compose(wreath.incl())?;
    report.absorb("wreath iso", check_isomorphism(&to, &from, &algebra, &wreath.product));
    let report = report.into_result("law over a separable Frobenius algebra")?;
    Ok(SfLaw {
        frobenius: s.clone(),
        ab,
        ba,
        phi: phi.clone(),
        algebra,
        fact,
        wdl: w,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn ground_and_diagonal_structures() {
        assert!(validate_frobenius(&FrobeniusStructure::ground()).passed());
        assert!(validate_frobenius(&FrobeniusStructure::diagonal(3)).passed());
    }

    #[test]
    fn group_algebra_with_wrong_basis_fails() {
        let z2 = Algebra::group_z2();
        let s = FrobeniusStructure::from_pairs(z2.clone(), Mat::from_ints(&[&[1, 0]]), &[(z2.one(), z2.one())]);
        let r = validate_frobenius(&s);
        assert!(!r.get("dual basis (left)").unwrap().passed);
        assert!(r.get("separable").unwrap().passed);
    }

    #[test]
    fn tensor_over_ground_is_identity() {
        let s = FrobeniusStructure::ground();
        let z2 = Algebra::group_z2();
        let t = tensor_over_r(
            &Module::right_via(&z2, z2.unit()),
            &Module::left_via(&z2, z2.unit()),
            &s,
        )
        .unwrap();
        assert!(t.proj.is_identity() && t.incl.is_identity());
    }

    #[test]
    fn regular_k_times_k() {
        let s = FrobeniusStructure::diagonal(2);
        let r = s.r.clone();
        let t = tensor_over_r(&Module::right_via(&r, &r.id()), &Module::left_via(&r, &r.id()), &s).unwrap();
        assert_eq!(t.dim, 2);
        // p₁⊗p₁ sits at 0 and p₂⊗p₂ at 3 in R⊗R.
        let image = t.idempotent();
        assert_eq!(image.col(0), vec![int(1), int(0), int(0), int(0)]);
        assert_eq!(image.col(3), vec![int(0), int(0), int(0), int(1)]);
        assert!(image.col(1).iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn over_ground_reduces_to_strict_wreath() {
        let s = FrobeniusStructure::ground();
        let a = Algebra::group_z2();
        let b = Algebra::diagonal(2);
        let law = sf_weak_dl(&a, &b, a.unit(), b.unit(), &Mat::flip(2, 2), &s).unwrap();
        assert_eq!(law.wdl.psi, Mat::flip(2, 2));
        assert!(law.wdl.is_strict());
    }
}
