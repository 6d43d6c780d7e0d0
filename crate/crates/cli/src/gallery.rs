//! Bundles for `example <name>`: the certified objects plus their report.

use serde_json::{json, Value};
use wreathlab::gallery::frobenius::{tensor_over_r, Module};
use wreathlab::gallery::{
    direct_sum_wdl, e_extension, sf_weak_dl, smash_wdl, triangle_fixture, FrobeniusStructure, ModuleAlgebra,
    WeakBialgebra,
};
use wreathlab::io::{mat_to_json, wreath_to_json, Bundle};
use wreathlab::linalg::int;
use wreathlab::{Algebra, Mat, Result, Wdl};

use crate::Outcome;

fn bundle(name: &str, report: &wreathlab::Report, mut objects: Value) -> Value {
    objects["example"] = json!(name);
    objects["report"] = report.to_json();
    objects
}

pub fn triangle() -> Result<Outcome> {
    let t = triangle_fixture()?;
    let wr = wreathlab::wdl::weak_wreath(&t.wdl)?;
    let v = json!({
        "fact": t.fact.to_json(),
        "law": t.wdl.to_json(),
        "pi": mat_to_json(&wreathlab::factorization::pi_of(&t.fact)),
        "wreath": wreath_to_json(&wr),
    });
    Ok(Outcome::with_bundle(t.report.clone(), bundle("triangle", &t.report, v)))
}

/// `A = k×k` with `e = (1, 0)` and `B = kℤ₂`.
pub fn e_ext() -> Result<Outcome> {
    let a = Algebra::diagonal(2);
    let e = e_extension(&a, &[int(1), int(0)], &Algebra::group_z2(), None)?;
    let v = json!({
        "e": ["1", "0"],
        "law": e.wdl.to_json(),
        "phi": e.phi.to_json(),
        "fact": e.fact.to_json(),
    });
    Ok(Outcome::with_bundle(e.report.clone(), bundle("e-ext", &e.report, v)))
}

/// The flips `kℤ₂⊗k` and `k⊗kℤ₂` summed blockwise.
pub fn dirsum() -> Result<Outcome> {
    let (k, z2) = (Algebra::ground(), Algebra::group_z2());
    let d = direct_sum_wdl(&[Wdl::flip(&z2, &k), Wdl::flip(&k, &z2)])?;
    let v = json!({
        "law": d.wdl.to_json(),
        "wreath": wreath_to_json(&d.wreath),
        "blocks": d.blocks.algebra.to_json(),
        "to_wreath": mat_to_json(&d.to_wreath),
        "from_wreath": mat_to_json(&d.from_wreath),
        "sf_law": d.sf.wdl.to_json(),
    });
    Ok(Outcome::with_bundle(d.report.clone(), bundle("dirsum", &d.report, v)))
}

/// `A = B = R = k×k` with the identity `R`-law.
pub fn frobenius() -> Result<Outcome> {
    let s = FrobeniusStructure::diagonal(2);
    let r = s.r.clone();
    let id = r.id();
    let ab = tensor_over_r(&Module::right_via(&r, &id), &Module::left_via(&r, &id), &s)?;
    let law = sf_weak_dl(&r, &r, &id, &id, &Mat::identity(ab.dim), &s)?;
    let v = json!({
        "R": s.to_json(),
        "phi": mat_to_json(&law.phi),
        "law": law.wdl.to_json(),
        "fact": law.fact.to_json(),
    });
    Ok(Outcome::with_bundle(
        law.report.clone(),
        bundle("frobenius", &law.report, v),
    ))
}

/// The groupoid algebra `k×k` acting componentwise on `k×k`.
pub fn smash() -> Result<Outcome> {
    let h = WeakBialgebra::discrete_groupoid(2);
    let m = ModuleAlgebra::discrete_objects(2);
    let s = smash_wdl(&h, &m)?;
    let v = json!({
        "H": h.to_json(),
        "module": m.to_json(),
        "law": s.wdl.to_json(),
        "sf_law": s.sf.wdl.to_json(),
    });
    Ok(Outcome::with_bundle(s.report.clone(), bundle("smash", &s.report, v)))
}
