//! Refining the factorization of `B⊗_Ψ A` through the images `Ã` of `α`
//! and `B̃` of `β`.

use crate::algebra::{image_subalgebra, ImageSubalgebra};
use crate::error::Result;
use crate::factorization::{validate_fact, wdl_of_fact, BilinFact};
use crate::linalg::Mat;
use crate::report::Report;
use crate::wdl::{weak_wreath, Wdl, WreathProduct};

#[derive(Clone, Debug)]
pub struct Refinement {
    pub wreath: WreathProduct,
    pub a_tilde: ImageSubalgebra,
    pub b_tilde: ImageSubalgebra,
    /// `Ã → B⊗_Ψ A ← B̃` with `ι̃ = (B̃⊗Ã corestriction) ι`.
    pub fact: BilinFact,
    pub wdl: Wdl,
    /// Both unit conditions of the refined law.
    pub strictness: Report,
    /// The two diagrams on the original law that characterize strictness.
    pub diagrams: Report,
    pub strict: bool,
    pub report: Report,
}

/// Evaluates both strictness diagrams on `(A, B, Ψ)`:
/// `(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(A⊗η) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(η⊗A)` and
/// `(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(η⊗B) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(B⊗η)`.
pub fn subalgebra_diagrams(w: &Wdl) -> Report {
    let (ia, ib) = (w.a.id(), w.b.id());
    let (ua, ub) = (w.a.unit(), w.b.unit());
    let spread = Mat::chain(&[&Mat::kron_all(&[ua, &ib, &ia, ub]), &w.psi.kron(&w.psi)]).unwrap();
    let mut r = Report::new("strictness diagrams");
    let lhs = Mat::chain(&[&ia.kron(ub), &w.psi, &spread]).unwrap();
    let rhs = spread.compose(&ub.kron(&ia)).unwrap();
    r.check_maps(
        "on A",
        "(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(A⊗η) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(η⊗A)",
        &lhs,
        &rhs,
        &[w.a.dim()],
    );
    let lhs = Mat::chain(&[&ua.kron(&ib), &w.psi, &spread]).unwrap();
    let rhs = spread.compose(&ib.kron(ua)).unwrap();
    r.check_maps(
        "on B",
        "(Ψ⊗Ψ)(η⊗B⊗A⊗η)Ψ(η⊗B) = (Ψ⊗Ψ)(η⊗B⊗A⊗η)(B⊗η)",
        &lhs,
        &rhs,
        &[w.b.dim()],
    );
    r
}

pub fn subalgebra_refinement(w: &Wdl) -> Result<Refinement> {
    let wreath = weak_wreath(w)?;
    let a_tilde = image_subalgebra(&wreath.alpha)?;
    let b_tilde = image_subalgebra(&wreath.beta)?;
    let iota = b_tilde
        .corestriction
        .kron(&a_tilde.corestriction)
        .compose(wreath.incl())?;
    let fact = BilinFact::new(
        a_tilde.algebra.clone(),
        b_tilde.algebra.clone(),
        wreath.product.clone(),
        a_tilde.inclusion.clone(),
        b_tilde.inclusion.clone(),
        iota,
    )?;
    let mut report = Report::new("subalgebra refinement");
    report.absorb("factorization", validate_fact(&fact));
    let report = report.into_result("subalgebra refinement")?;
    let refined = wdl_of_fact(&fact)?;
    let strictness = refined.strictness();
    let diagrams = subalgebra_diagrams(w);
    Ok(Refinement {
        strict: strictness.passed(),
        wreath,
        a_tilde,
        b_tilde,
        fact,
        wdl: refined,
        strictness,
        diagrams,
        report,
    })
}
