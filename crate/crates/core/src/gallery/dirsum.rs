//! Block sums of strict distributive laws `Φᵢ: Aᵢ⊗Bᵢ → Bᵢ⊗Aᵢ`:
//! `aᵢ⊗bⱼ ↦ δᵢⱼ Φᵢ(aᵢ⊗bᵢ)` on `⊕Aᵢ ⊗ ⊕Bⱼ`.

use crate::algebra::{check_isomorphism, direct_sum, DirectSum};
use crate::error::{Error, Result};
use crate::gallery::frobenius::{project_law, sf_weak_dl, tensor_over_r, FrobeniusStructure, Module, SfLaw};
use crate::linalg::Mat;
use crate::report::Report;
use crate::wdl::{check_wdl, weak_wreath, Wdl, WreathProduct};

#[derive(Clone, Debug)]
pub struct DirSumLaw {
    pub a: DirectSum,
    pub b: DirectSum,
    pub wdl: Wdl,
    pub wreath: WreathProduct,
    /// `⊕ᵢ (Bᵢ⊗_{Φᵢ}Aᵢ)`.
    pub blocks: DirectSum,
    /// `⊕ᵢ (Bᵢ⊗_{Φᵢ}Aᵢ) → B⊗_Ψ A`.
    pub to_wreath: Mat,
    pub from_wreath: Mat,
    /// The same law obtained over `R = kⁿ`.
    pub sf: SfLaw,
    pub report: Report,
}

pub fn direct_sum_wdl(laws: &[Wdl]) -> Result<DirSumLaw> {
    if laws.is_empty() {
        return Err(Error::Shape("direct_sum_wdl needs at least one law".into()));
    }
    let mut pre = Report::new("summands");
    for (i, w) in laws.iter().enumerate() {
        pre.absorb(&format!("{i}"), check_wdl(&w.a, &w.b, &w.psi));
        pre.absorb(&format!("{i}"), w.strictness());
    }
    pre.into_result("summands of a direct sum law")?;

    let a = direct_sum(&laws.iter().map(|w| w.a.clone()).collect::<Vec<_>>())?;
    let b = direct_sum(&laws.iter().map(|w| w.b.clone()).collect::<Vec<_>>())?;
    let (da, db) = (a.algebra.dim(), b.algebra.dim());
    let mut psi = Mat::zeros(db * da, da * db);
    for (i, w) in laws.iter().enumerate() {
        let block = Mat::chain(&[
            &a.projections[i].kron(&b.projections[i]),
            &w.psi,
            &b.injections[i].kron(&a.injections[i]),
        ])?;
        psi = psi.add(&block)?;
    }
    let wdl = Wdl::new(a.algebra.clone(), b.algebra.clone(), psi)?;
    let mut report = Report::new("direct sum law");
    report.absorb("law", check_wdl(&wdl.a, &wdl.b, &wdl.psi));
    let wreath = weak_wreath(&wdl)?;

    let strict: Vec<WreathProduct> = laws.iter().map(weak_wreath).collect::<Result<_>>()?;
    let blocks = direct_sum(&strict.iter().map(|s| s.product.clone()).collect::<Vec<_>>())?;
    let mut to_wreath = Mat::zeros(wreath.product.dim(), blocks.algebra.dim());
    let mut from_wreath = Mat::zeros(blocks.algebra.dim(), wreath.product.dim());
    for (i, s) in strict.iter().enumerate() {
        let embed = b.injections[i].kron(&a.injections[i]);
        let restrict = b.projections[i].kron(&a.projections[i]);
        let to = Mat::chain(&[&blocks.projections[i], s.incl(), &embed, wreath.proj()])?;
        let from = Mat::chain(&[wreath.incl(), &restrict, s.proj(), &blocks.injections[i]])?;
        to_wreath = to_wreath.add(&to)?;
        from_wreath = from_wreath.add(&from)?;
    }
    report.absorb(
        "block iso",
        check_isomorphism(&to_wreath, &from_wreath, &blocks.algebra, &wreath.product),
    );

    let n = laws.len();
    let frob = FrobeniusStructure::diagonal(n);
    let unit_cols = |d: &DirectSum| {
        let cols: Vec<_> = (0..n).map(|i| d.injections[i].apply(&laws_unit(d, i))).collect();
        Mat::from_cols(d.algebra.dim(), &cols)
    };
    let eta_a = unit_cols(&a);
    let eta_b = unit_cols(&b);
    let ab = tensor_over_r(
        &Module::right_via(&a.algebra, &eta_a),
        &Module::left_via(&b.algebra, &eta_b),
        &frob,
    )?;
    let ba = tensor_over_r(
        &Module::right_via(&b.algebra, &eta_b),
        &Module::left_via(&a.algebra, &eta_a),
        &frob,
    )?;
    let phi = project_law(&ab, &ba, &wdl.psi);
    let sf = sf_weak_dl(&a.algebra, &b.algebra, &eta_a, &eta_b, &phi, &frob)?;
    report.check_maps(
        "separable Frobenius realization",
        "ι Φ π = Ψ",
        &sf.wdl.psi,
        &wdl.psi,
        &[da, db],
    );
    let dims: usize = laws.iter().map(|w| w.a.dim() * w.b.dim()).sum();
    report.check_condition(
        "dimension over R",
        "dim B⊗_R A = Σ dim Aᵢ dim Bᵢ",
        ba.dim == dims,
        vec![ba.dim, dims],
    );
    let report = report.into_result("direct sum law")?;
    Ok(DirSumLaw {
        a,
        b,
        wdl,
        wreath,
        blocks,
        to_wreath,
        from_wreath,
        sf,
        report,
    })
}

/// The unit of the `i`-th summand, in its own coordinates.
fn laws_unit(d: &DirectSum, i: usize) -> Vec<crate::linalg::Scalar> {
    d.projections[i].apply(&d.algebra.one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::wdl::psibar;

    #[test]
    fn single_summand_is_unchanged() {
        let z2 = Algebra::group_z2();
        let w = Wdl::flip(&z2, &Algebra::diagonal(2));
        let d = direct_sum_wdl(std::slice::from_ref(&w)).unwrap();
        assert_eq!(d.wdl.psi, w.psi);
    }

    #[test]
    fn two_ground_swaps() {
        let k = Algebra::ground();
        let w = Wdl::flip(&k, &k);
        let d = direct_sum_wdl(&[w.clone(), w]).unwrap();
        assert_eq!(d.wdl.psi.shape(), (4, 4));
        assert_eq!(psibar(&d.wdl).unwrap().rank(), 2);
        assert_eq!(d.wreath.product.dim(), 2);
    }

    #[test]
    fn mixed_summands() {
        let k = Algebra::ground();
        let z2 = Algebra::group_z2();
        let d = direct_sum_wdl(&[Wdl::flip(&z2, &k), Wdl::flip(&k, &z2)]).unwrap();
        assert_eq!(d.wdl.psi.shape(), (9, 9));
        assert_eq!(d.wreath.product.dim(), 4);
        assert_eq!(d.sf.ba.dim, 4);
    }

    #[test]
    fn non_strict_summand_is_rejected() {
        let t = crate::gallery::triangle::triangle_fixture().unwrap();
        assert!(direct_sum_wdl(&[t.wdl]).is_err());
    }
}
