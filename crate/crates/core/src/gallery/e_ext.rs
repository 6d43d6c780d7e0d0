//! Extension of a strict distributive law `Φ: eA⊗B → B⊗eA` along an element
//! `e ∈ A` with `ea = eae`, to the weak law `Ψ(a⊗b) = Φ(ea⊗b)` of `A` over `B`.

use crate::algebra::{image_of_multiplicative, Algebra, ImageSubalgebra};
use crate::error::{Error, Result};
use crate::factorization::{iso_to_wreath, BilinFact, WreathIso};
use crate::linalg::{Mat, Scalar};
use crate::report::Report;
use crate::wdl::{check_wdl, Wdl};

#[derive(Clone, Debug)]
pub struct EExtension {
    /// `eA` with unit `e`, and the maps `eA → A`, `a ↦ ea`.
    pub ea: ImageSubalgebra,
    /// The strict law on `eA ⊗ B`.
    pub phi: Wdl,
    pub wdl: Wdl,
    /// `B⊗_Φ eA` with `a ↦ 1⊗ea`, `b ↦ b⊗e` and `ι = B⊗incl`.
    pub fact: BilinFact,
    /// Certified comparison of `B⊗_Φ eA` with `B⊗_Ψ A`.
    pub iso: WreathIso,
    pub report: Report,
}

/// Finds the first basis element with `ea ≠ eae`.
pub fn check_corner(a: &Algebra, e: &[Scalar]) -> Result<()> {
    for i in 0..a.dim() {
        let ea = a.mul(e, &a.basis_elem(i));
        if ea != a.mul(&ea, e) {
            return Err(Error::BadIdempotent {
                index: i,
                name: a.basis()[i].clone(),
            });
        }
    }
    Ok(())
}

/// Builds and certifies the extended law. With `phi = None` the flip
/// `ea⊗b ↦ b⊗ea` is used, giving `Ψ(a⊗b) = b⊗ea`.
pub fn e_extension(a: &Algebra, e: &[Scalar], b: &Algebra, phi: Option<Mat>) -> Result<EExtension> {
    if e.len() != a.dim() {
        return Err(Error::Shape(format!(
            "e has {} coordinates, A has dimension {}",
            e.len(),
            a.dim()
        )));
    }
    check_corner(a, e)?;
    let left_e = a.left_mult(e);
    let mut ea = image_of_multiplicative(a, a, &left_e)?;
    let names = left_e
        .pivot_columns()
        .iter()
        .map(|&p| format!("e·{}", a.basis()[p]))
        .collect();
    ea.algebra = ea.algebra.clone().with_basis_names(names);
    let (r, db) = (ea.algebra.dim(), b.dim());
    let phi = match phi {
        Some(m) => Wdl::new(ea.algebra.clone(), b.clone(), m)?,
        None => Wdl::flip(&ea.algebra, b),
    };
    let mut pre = Report::new("strict law on eA⊗B");
    pre.absorb("law", check_wdl(&phi.a, &phi.b, &phi.psi));
    pre.absorb("strict", phi.strictness());
    pre.into_result("strict law on eA⊗B")?;

    let psi = Mat::chain(&[&ea.corestriction.kron(&b.id()), &phi.psi, &b.id().kron(&ea.inclusion)])?;
    let wdl = Wdl::new(a.clone(), b.clone(), psi)?;
    let mut report = Report::new("e-extension");
    report.absorb("law", check_wdl(&wdl.a, &wdl.b, &wdl.psi));

    let strict = crate::wdl::weak_wreath(&phi)?;
    let fact = BilinFact::new(
        a.clone(),
        b.clone(),
        strict.product.clone(),
        strict.proj().compose(&b.unit().kron(&ea.corestriction))?,
        strict.proj().compose(&b.id().kron(ea.algebra.unit()))?,
        b.id().kron(&ea.inclusion).compose(strict.incl())?,
    )?;
    let iso = iso_to_wreath(&fact)?;
    report.check_maps(
        "law of the factorization",
        "ι μ(α⊗β) = Ψ",
        &crate::factorization::wdl_of_fact(&fact)?.psi,
        &wdl.psi,
        &[a.dim(), db],
    );
    report.absorb("wreath iso", iso.report.clone());
    report.check_condition(
        "wreath dimension",
        "dim B⊗_Ψ A = dim B · dim eA",
        iso.wreath.product.dim() == r * db,
        vec![],
    );
    let report = report.into_result("e-extension")?;
    Ok(EExtension {
        ea,
        phi,
        wdl,
        fact,
        iso,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::triangle::triangle_algebra;
    use crate::linalg::{int, rat};
    use crate::wdl::psibar;

    #[test]
    fn corner_of_k_times_k() {
        let a = Algebra::diagonal(2);
        let k = Algebra::ground();
        let ext = e_extension(&a, &[int(1), int(0)], &k, None).unwrap();
        assert_eq!(ext.wdl.psi, Mat::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(psibar(&ext.wdl).unwrap(), a.left_mult(&[int(1), int(0)]));
        assert_eq!(ext.iso.wreath.product.dim(), 1);
    }

    #[test]
    fn unit_element_gives_strict_law() {
        let a = Algebra::group_z2();
        let ext = e_extension(&a, &a.one(), &Algebra::diagonal(2), None).unwrap();
        assert!(ext.wdl.is_strict());
        assert!(psibar(&ext.wdl).unwrap().is_identity());
    }

    #[test]
    fn upper_triangular_corners() {
        let t = Algebra::upper_triangular();
        let z2 = Algebra::group_z2();
        let err = e_extension(&t, &[int(1), int(0), int(0)], &z2, None).unwrap_err();
        assert!(matches!(err, Error::BadIdempotent { index: 1, .. }));
        let ext = e_extension(&t, &[int(0), int(0), int(1)], &z2, None).unwrap();
        assert_eq!(ext.ea.algebra.dim(), 1);
        assert_eq!(ext.iso.wreath.product.dim(), 2);
    }

    #[test]
    fn half_one_minus_b_in_t() {
        let t = triangle_algebra();
        let z2 = Algebra::group_z2();
        let minus = e_extension(&t, &[rat(1, 2), int(0), rat(-1, 2)], &z2, None);
        let plus = e_extension(&t, &[rat(1, 2), int(0), rat(1, 2)], &z2, None);
        // e = ½(1−b): ea = ½(1+2a+b) but eae = ½(1−b).
        assert!(matches!(minus, Err(Error::BadIdempotent { index: 1, .. })));
        // e = ½(1+b): ea = −e and eb = e, so eA = k·e.
        let plus = plus.unwrap();
        assert_eq!(plus.ea.algebra.dim(), 1);
        assert_eq!(plus.iso.wreath.product.dim(), 2);
    }

    #[test]
    fn user_supplied_phi_is_validated() {
        let a = Algebra::group_z2();
        let z2 = Algebra::group_z2();
        let err = e_extension(&a, &a.one(), &z2, Some(Mat::zeros(4, 4))).unwrap_err();
        assert!(matches!(err, Error::CheckFailed { .. }));
        assert!(e_extension(&a, &a.one(), &z2, Some(Mat::flip(2, 2))).is_ok());
    }
}
