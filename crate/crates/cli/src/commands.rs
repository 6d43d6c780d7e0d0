use std::path::Path;

use serde_json::{json, Map, Value};
use wreathlab::cells::{check_fact_onecell, check_wdl_onecell, lift_to_wreaths, rho_from, F_on_cells};
use wreathlab::factorization::{roundtrip_fact, roundtrip_object, validate_fact, wdl_of_fact};
use wreathlab::gallery::bialgebra::validate_module_algebra;
use wreathlab::gallery::{
    validate_frobenius, validate_weak_bialgebra, FrobeniusStructure, ModuleAlgebra, WeakBialgebra,
};
use wreathlab::io::{
    load_bundle, load_cell, orepoly_from_json, orepoly_to_json, read_text, schema_err, wreath_to_json, Bundle,
    CellBundle, Object,
};
use wreathlab::ore::{
    default_degree, ore_associativity, ore_check_properties, ore_strictness, ore_tilde_basis, ore_wreath_mult,
    validate_pqqd, OrePoly, PQQuasiDerivation,
};
use wreathlab::wdl::{check_wdl, psibar_identities, weak_wreath};
use wreathlab::{Algebra, BilinFact, Report, Result, Wdl};

use crate::Outcome;

fn load_value(path: &Path) -> Result<Value> {
    let text = read_text(path)?;
    Ok(serde_json::from_str(&text).map_err(|e| schema_err("", format!("invalid JSON: {e}")))?)
}

fn keys(v: &Value) -> Result<&Map<String, Value>> {
    Ok(wreathlab::io::as_object(v, "")?)
}

/// Dispatches on the distinguishing key of the bundle.
pub fn validate(file: &Path) -> Result<Outcome> {
    let v = load_value(file)?;
    let obj = keys(&v)?;
    let has = |k: &str| obj.contains_key(k);
    if has("xi") {
        return check_cell(file);
    }
    let report = if has("sigma") {
        validate_pqqd(&PQQuasiDerivation::from_json(&v)?)
    } else if has("H") && has("module") {
        let (h, _) = wreathlab::io::field(&v, "H", "")?;
        let h = WeakBialgebra::from_json_at(h, "/H")?;
        let (m, _) = wreathlab::io::field(&v, "module", "")?;
        let m = ModuleAlgebra::from_json_at(m, "/module")?;
        let mut r = Report::new("smash product data");
        r.absorb("weak bialgebra", validate_weak_bialgebra(&h));
        r.absorb("module algebra", validate_module_algebra(&h, &m));
        r
    } else if has("comult") {
        validate_weak_bialgebra(&WeakBialgebra::from_json(&v)?)
    } else if has("frobenius_functional") {
        validate_frobenius(&FrobeniusStructure::from_json(&v)?)
    } else if has("iota") {
        validate_fact(&BilinFact::from_json(&v)?)
    } else if has("psi") {
        let w = Wdl::from_json(&v)?;
        check_wdl(&w.a, &w.b, &w.psi)
    } else if has("mult") {
        Algebra::from_json(&v)?.validate()
    } else {
        return Err(schema_err("", "unrecognized bundle: no distinguishing key").into());
    };
    Ok(Outcome::report(report))
}

pub fn check_law(file: &Path) -> Result<Outcome> {
    let w: Wdl = load_bundle(file)?;
    let mut report = check_wdl(&w.a, &w.b, &w.psi);
    if report.passed() {
        report.absorb("psibar", psibar_identities(&w));
    }
    Ok(Outcome::report(report))
}

pub fn wreath(file: &Path) -> Result<Outcome> {
    let w: Wdl = load_bundle(file)?;
    let report = check_wdl(&w.a, &w.b, &w.psi).into_result("weak distributive law")?;
    let wr = weak_wreath(&w)?;
    let mut report = report;
    report.absorb("wreath product", wr.product.validate());
    Ok(Outcome::with_bundle(report, wreath_to_json(&wr)))
}

pub fn factor(file: &Path) -> Result<Outcome> {
    let f: BilinFact = load_bundle(file)?;
    let report = validate_fact(&f).into_result("bilinear factorization")?;
    let w = wdl_of_fact(&f)?;
    let mut report = report;
    report.absorb("induced law", check_wdl(&w.a, &w.b, &w.psi));
    Ok(Outcome::with_bundle(report, w.to_json()))
}

pub fn roundtrip(file: &Path) -> Result<Outcome> {
    let report = match load_bundle::<Object>(file)? {
        Object::Wdl(w) => {
            check_wdl(&w.a, &w.b, &w.psi).into_result("weak distributive law")?;
            roundtrip_object(&w)?
        }
        Object::Fact(f) => {
            validate_fact(&f).into_result("bilinear factorization")?;
            roundtrip_fact(&f)?
        }
    };
    Ok(Outcome::report(report))
}

fn is_fact_cell(c: &CellBundle) -> bool {
    matches!((&c.src, &c.dst), (Object::Fact(_), Object::Fact(_))) && c.rho.is_some()
}

pub fn check_cell(file: &Path) -> Result<Outcome> {
    let c = load_cell(file)?;
    let report = if is_fact_cell(&c) {
        check_fact_onecell(&c.fact_cell()?)
    } else {
        check_wdl_onecell(&c.wdl_cell()?)
    };
    Ok(Outcome::report(report))
}

pub fn lift_cell(file: &Path) -> Result<Outcome> {
    let c = load_cell(file)?;
    let cell = c.wdl_cell()?;
    let lifted = match (&c.src, &c.dst) {
        (Object::Fact(s), Object::Fact(d)) => rho_from(&cell, s, d)?,
        _ => lift_to_wreaths(&cell)?,
    };
    let mut report = check_fact_onecell(&lifted);
    let back = F_on_cells(&lifted)?;
    report.check_condition("forgets back", "F(ρ-lift of c) = c", back == cell, vec![]);
    Ok(Outcome::with_bundle(
        report,
        CellBundle::from_fact_cell(&lifted).to_json(),
    ))
}

pub fn load_pqqd(file: Option<&Path>) -> Result<PQQuasiDerivation> {
    match file {
        Some(f) => load_bundle(f),
        None => Ok(PQQuasiDerivation::upper_triangular_example()),
    }
}

pub fn ore_check(d: &PQQuasiDerivation, degree: Option<usize>) -> Result<Outcome> {
    let n = degree.unwrap_or_else(default_degree);
    let mut report = Report::new(format!("weak Ore extension up to degree {n}"));
    report.absorb("pqqd", validate_pqqd(d));
    if report.passed() {
        report.absorb("law", ore_check_properties(d, n));
        report.absorb("refinement", ore_strictness(d, n));
        report.absorb("product", ore_associativity(d, n));
        report.absorb("characterization", ore_tilde_basis(d, n).report);
    }
    Ok(Outcome::report(report))
}

fn load_poly(path: &Path, dim: usize) -> Result<OrePoly> {
    let v = load_value(path)?;
    Ok(orepoly_from_json(&v, "", dim)?)
}

pub fn ore_mult(d: &PQQuasiDerivation, f: &Path, g: &Path) -> Result<Outcome> {
    let report = validate_pqqd(d).into_result("p-q-quasi-derivation")?;
    let (f, g) = (load_poly(f, d.b.dim())?, load_poly(g, d.b.dim())?);
    let fg = ore_wreath_mult(d, &f, &g);
    Ok(Outcome::with_bundle(report, json!({"product": orepoly_to_json(&fg)})))
}
