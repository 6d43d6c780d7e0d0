//! Bilinear factorization structures `α: A → R ← B: β` with a bimodule
//! section `ι: R → B⊗A` of `π = μ_R(β⊗α)`, and their correspondence with
//! weak distributive laws.

use crate::algebra::{
    check_isomorphism, induced_bimodule, is_algebra_hom, is_bimodule_map, Algebra, AlgebraHom, BimoduleStructure,
};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::report::Report;
use crate::wdl::{check_wdl, psibar_fast, weak_wreath, Wdl, WreathProduct};

/// Only `ι` is stored; `π` is always derived from `α` and `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinFact {
    pub a: Algebra,
    pub b: Algebra,
    pub r: Algebra,
    /// `A → R`, an `r × a` matrix.
    pub alpha: Mat,
    /// `B → R`, an `r × b` matrix.
    pub beta: Mat,
    /// `R → B⊗A`, a `ba × r` matrix.
    pub iota: Mat,
}

impl BilinFact {
    /// Checks shapes only; see [`validate_fact`].
    pub fn new(a: Algebra, b: Algebra, r: Algebra, alpha: Mat, beta: Mat, iota: Mat) -> Result<Self> {
        let (da, db, dr) = (a.dim(), b.dim(), r.dim());
        for (name, m, shape) in [
            ("alpha", &alpha, (dr, da)),
            ("beta", &beta, (dr, db)),
            ("iota", &iota, (db * da, dr)),
        ] {
            if m.shape() != shape {
                return Err(Error::Shape(format!(
                    "{name} must be {}x{}, got {:?}",
                    shape.0,
                    shape.1,
                    m.shape()
                )));
            }
        }
        Ok(BilinFact {
            a,
            b,
            r,
            alpha,
            beta,
            iota,
        })
    }

    /// The strict factorization of the tensor algebra `B⊗A` through
    /// `a ↦ 1⊗a`, `b ↦ b⊗1`, with `ι = id`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Self {
        let r = crate::algebra::tensor_algebra(b, a);
        BilinFact {
            alpha: b.unit().kron(&a.id()),
            beta: b.id().kron(a.unit()),
            iota: Mat::identity(r.dim()),
            a: a.clone(),
            b: b.clone(),
            r,
        }
    }

    pub fn alpha_hom(&self) -> AlgebraHom {
        AlgebraHom {
            src: self.a.clone(),
            dst: self.r.clone(),
            map: self.alpha.clone(),
        }
    }

    pub fn beta_hom(&self) -> AlgebraHom {
        AlgebraHom {
            src: self.b.clone(),
            dst: self.r.clone(),
            map: self.beta.clone(),
        }
    }

    /// `R` with left `B`-action through `β` and right `A`-action through `α`.
    pub fn induced(&self) -> BimoduleStructure {
        induced_bimodule(&self.r, &self.alpha_hom(), &self.beta_hom()).expect("homomorphisms land in R by construction")
    }
}

/// `π = μ_R(β⊗α): B⊗A → R`.
pub fn pi_of(f: &BilinFact) -> Mat {
    f.r.mult().compose(&f.beta.kron(&f.alpha)).unwrap()
}

/// Every invariant of a bilinear factorization structure.
pub fn validate_fact(f: &BilinFact) -> Report {
    let mut r = Report::new("bilinear factorization");
    r.absorb("alpha", is_algebra_hom(&f.alpha, &f.a, &f.r));
    r.absorb("beta", is_algebra_hom(&f.beta, &f.b, &f.r));
    if !r.passed() {
        return r;
    }
    let pi = pi_of(f);
    let dr = f.r.dim();
    r.check_maps("section", "π ι = id_R", &pi.compose(&f.iota).unwrap(), &f.r.id(), &[dr]);
    let outer = BimoduleStructure::outer(&f.b, &f.a);
    let induced = f.induced();
    r.absorb("pi", is_bimodule_map(&pi, &outer, &induced));
    r.absorb("iota", is_bimodule_map(&f.iota, &induced, &outer));
    r
}

/// The identities relating a factorization to its weak distributive law.
pub fn fact_law_identities(f: &BilinFact, w: &Wdl) -> Report {
    let (da, db) = (f.a.dim(), f.b.dim());
    let pi = pi_of(f);
    let mut r = Report::new("law of a factorization");
    let ip = f.iota.compose(&pi).unwrap();
    r.check_maps("psibar splits", "Ψ̄ = ι π", &psibar_fast(w), &ip, &[db, da]);
    let mu =
        w.b.mult()
            .kron(w.a.mult())
            .compose(&Mat::kron_all(&[&f.b.id(), &w.psi, &f.a.id()]))
            .unwrap();
    let lhs = Mat::chain(&[&pi.kron(&pi), f.r.mult(), &f.iota]).unwrap();
    r.check_maps(
        "multiplication through R",
        "ι μ_R(π⊗π) = (μ_B⊗μ_A)(B⊗Ψ⊗A)",
        &lhs,
        &mu,
        &[db, da, db, da],
    );
    r.check_maps(
        "pi multiplicative",
        "π μ = μ_R(π⊗π)",
        &pi.compose(&mu).unwrap(),
        &f.r.mult().compose(&pi.kron(&pi)).unwrap(),
        &[db, da, db, da],
    );
    let dr = f.r.dim();
    r.check_maps(
        "iota multiplicative",
        "μ(ι⊗ι) = ι μ_R",
        &mu.compose(&f.iota.kron(&f.iota)).unwrap(),
        &f.iota.compose(f.r.mult()).unwrap(),
        &[dr, dr],
    );
    r
}

/// `Ψ = ι μ_R(α⊗β)`, certified to be a weak distributive law whose
/// idempotent is split by `π` and `ι`.
pub fn wdl_of_fact(f: &BilinFact) -> Result<Wdl> {
    validate_fact(f).into_result("bilinear factorization")?;
    let psi = Mat::chain(&[&f.alpha.kron(&f.beta), f.r.mult(), &f.iota])?;
    let w = Wdl::new(f.a.clone(), f.b.clone(), psi)?;
    check_wdl(&w.a, &w.b, &w.psi).into_result("weak distributive law of a factorization")?;
    fact_law_identities(f, &w).into_result("law of a factorization")?;
    Ok(w)
}

/// The factorization of a weak wreath product through its canonical maps.
pub fn fact_of_wreath(wr: &WreathProduct) -> BilinFact {
    BilinFact {
        a: wr.wdl.a.clone(),
        b: wr.wdl.b.clone(),
        r: wr.product.clone(),
        alpha: wr.alpha.map.clone(),
        beta: wr.beta.map.clone(),
        iota: wr.incl().clone(),
    }
}

pub fn fact_of_wdl(w: &Wdl) -> Result<BilinFact> {
    let f = fact_of_wreath(&weak_wreath(w)?);
    validate_fact(&f).into_result("factorization of a weak wreath product")?;
    Ok(f)
}

/// `Ψ ↦ factorization ↦ Ψ` recovers the law exactly.
pub fn roundtrip_object(w: &Wdl) -> Result<Report> {
    let back = wdl_of_fact(&fact_of_wdl(w)?)?;
    let mut r = Report::new("law roundtrip");
    r.check_maps(
        "psi recovered",
        "Ψ ↦ (B⊗_Ψ A, α, β, ι) ↦ Ψ",
        &back.psi,
        &w.psi,
        &[w.a.dim(), w.b.dim()],
    );
    Ok(r)
}

/// The comparison between `R` and the weak wreath product of its law.
#[derive(Clone, Debug)]
pub struct WreathIso {
    pub wreath: WreathProduct,
    /// `proj_Ψ ι: R → B⊗_Ψ A`.
    pub to_wreath: Mat,
    /// `π incl_Ψ: B⊗_Ψ A → R`.
    pub from_wreath: Mat,
    pub report: Report,
}

/// Builds the two comparison maps and checks that they are inverse algebra
/// isomorphisms compatible with `α` and `β`. The report is returned even
/// when checks fail.
pub fn iso_to_wreath(f: &BilinFact) -> Result<WreathIso> {
    let w = wdl_of_fact(f)?;
    let wreath = weak_wreath(&w)?;
    let to_wreath = wreath.proj().compose(&f.iota)?;
    let from_wreath = pi_of(f).compose(wreath.incl())?;
    let mut report = Report::new("factorization roundtrip");
    report.absorb(
        "iso",
        check_isomorphism(&to_wreath, &from_wreath, &f.r, &wreath.product),
    );
    let (da, db) = (f.a.dim(), f.b.dim());
    report.check_maps(
        "alpha compatible",
        "proj_Ψ ι α = α_Ψ",
        &to_wreath.compose(&f.alpha)?,
        &wreath.alpha.map,
        &[da],
    );
    report.check_maps(
        "beta compatible",
        "proj_Ψ ι β = β_Ψ",
        &to_wreath.compose(&f.beta)?,
        &wreath.beta.map,
        &[db],
    );
    Ok(WreathIso {
        wreath,
        to_wreath,
        from_wreath,
        report,
    })
}

pub fn roundtrip_fact(f: &BilinFact) -> Result<Report> {
    Ok(iso_to_wreath(f)?.report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn tensor_factorization_is_strict() {
        let z2 = Algebra::group_z2();
        let k2 = Algebra::diagonal(2);
        let f = BilinFact::tensor(&z2, &k2);
        assert!(validate_fact(&f).passed());
        assert!(pi_of(&f).is_identity());
        let w = wdl_of_fact(&f).unwrap();
        assert_eq!(w.psi, Mat::flip(2, 2));
        assert!(roundtrip_object(&w).unwrap().passed());
        assert!(roundtrip_fact(&f).unwrap().passed());
    }

    #[test]
    fn ground_factorization() {
        let k = Algebra::ground();
        let f = BilinFact::new(k.clone(), k.clone(), k.clone(), k.id(), k.id(), k.id()).unwrap();
        assert!(pi_of(&f).is_identity());
        assert!(validate_fact(&f).passed());
    }

    #[test]
    fn broken_section_is_witnessed() {
        let z2 = Algebra::group_z2();
        let mut f = BilinFact::tensor(&z2, &z2);
        f.iota.set(0, 0, int(2));
        let r = validate_fact(&f);
        let c = r.get("section").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().indices, vec![0]);
        assert!(wdl_of_fact(&f).is_err());
    }

    #[test]
    fn shapes_are_checked() {
        let z2 = Algebra::group_z2();
        assert!(BilinFact::new(z2.clone(), z2.clone(), z2.clone(), z2.id(), z2.id(), z2.id()).is_err());
    }
}
