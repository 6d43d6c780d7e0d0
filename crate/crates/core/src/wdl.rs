//! Weak distributive laws `Ψ: A ⊗ B → B ⊗ A`, the canonical idempotent `Ψ̄`
//! on `B ⊗ A`, and the weak wreath product obtained by splitting it.

use crate::algebra::{is_algebra_hom, is_bimodule_map, Algebra, AlgebraHom, BimoduleStructure};
use crate::error::{Error, Result};
use crate::linalg::{split_idempotent, Mat, Splitting};
use crate::report::Report;

/// A candidate weak distributive law of `a` over `b`. Construction checks
/// shapes only; [`check_wdl`] decides whether the axioms hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wdl {
    pub a: Algebra,
    pub b: Algebra,
    pub psi: Mat,
}

impl Wdl {
    pub fn new(a: Algebra, b: Algebra, psi: Mat) -> Result<Self> {
        let n = a.dim() * b.dim();
        if psi.shape() != (n, n) {
            return Err(Error::Shape(format!(
                "Ψ: A⊗B → B⊗A must be {n}x{n}, got {:?}",
                psi.shape()
            )));
        }
        Ok(Wdl { a, b, psi })
    }

    /// The flip `a ⊗ b ↦ b ⊗ a`, a strict law whenever `A` and `B` are
    /// arbitrary algebras (it yields the tensor product algebra).
    pub fn flip(a: &Algebra, b: &Algebra) -> Self {
        Wdl {
            psi: Mat::flip(a.dim(), b.dim()),
            a: a.clone(),
            b: b.clone(),
        }
    }

    fn parts(&self) -> Parts<'_> {
        Parts::new(&self.a, &self.b, &self.psi)
    }

    /// Both unit conditions of an ordinary distributive law:
    /// `Ψ(A⊗η) = η⊗A` and `Ψ(η⊗B) = B⊗η`.
    pub fn strictness(&self) -> Report {
        let p = self.parts();
        let mut r = Report::new("strict unitality");
        let lhs = self.psi.compose(&p.ia.kron(self.b.unit())).unwrap();
        let rhs = self.b.unit().kron(&p.ia);
        r.check_maps("unital in B", "Ψ(A⊗η) = η⊗A", &lhs, &rhs, &[p.da]);
        let lhs = self.psi.compose(&self.a.unit().kron(&p.ib)).unwrap();
        let rhs = p.ib.kron(self.a.unit());
        r.check_maps("unital in A", "Ψ(η⊗B) = B⊗η", &lhs, &rhs, &[p.db]);
        r
    }

    pub fn is_strict(&self) -> bool {
        self.strictness().passed()
    }
}

/// Shared building blocks for the diagrams.
struct Parts<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    psi: &'a Mat,
    ia: Mat,
    ib: Mat,
    da: usize,
    db: usize,
}

impl<'a> Parts<'a> {
    fn new(a: &'a Algebra, b: &'a Algebra, psi: &'a Mat) -> Self {
        Parts {
            a,
            b,
            psi,
            ia: a.id(),
            ib: b.id(),
            da: a.dim(),
            db: b.dim(),
        }
    }

    /// `(B⊗μ_A)(Ψ⊗A)`: `A⊗B⊗A → B⊗A`.
    fn psi_then_mult_a(&self) -> Mat {
        self.ib.kron(self.a.mult()).compose(&self.psi.kron(&self.ia)).unwrap()
    }

    /// `(μ_B⊗A)(B⊗Ψ)`: `B⊗A⊗B → B⊗A`.
    fn psi_then_mult_b(&self) -> Mat {
        self.b.mult().kron(&self.ia).compose(&self.ib.kron(self.psi)).unwrap()
    }

    fn kappa_left(&self) -> Mat {
        let ins = Mat::kron_all(&[self.a.unit(), &self.ib, &self.ia]);
        self.psi_then_mult_a().compose(&ins).unwrap()
    }

    fn kappa_right(&self) -> Mat {
        let ins = Mat::kron_all(&[&self.ib, &self.ia, self.b.unit()]);
        self.psi_then_mult_b().compose(&ins).unwrap()
    }

    /// `μ = (μ_B⊗μ_A)(B⊗Ψ⊗A)` on `B⊗A⊗B⊗A`.
    fn nonunital_mult(&self) -> Mat {
        self.b
            .mult()
            .kron(self.a.mult())
            .compose(&Mat::kron_all(&[&self.ib, self.psi, &self.ia]))
            .unwrap()
    }
}

fn shape_report(a: &Algebra, b: &Algebra, psi: &Mat) -> Option<Report> {
    let n = a.dim() * b.dim();
    if psi.shape() == (n, n) {
        return None;
    }
    let mut r = Report::new("weak distributive law");
    r.check_condition(
        "shape",
        format!("Ψ must be {n}x{n}, got {:?}", psi.shape()),
        false,
        vec![],
    );
    Some(r)
}

fn check_first_two(r: &mut Report, p: &Parts<'_>) {
    let (da, db) = (p.da, p.db);
    let lhs = p.psi.compose(&p.a.mult().kron(&p.ib)).unwrap();
    let rhs = p.psi_then_mult_a().compose(&p.ia.kron(p.psi)).unwrap();
    r.check_maps(
        "multiplicative in A",
        "Ψ(μ_A⊗B) = (B⊗μ_A)(Ψ⊗A)(A⊗Ψ)",
        &lhs,
        &rhs,
        &[da, da, db],
    );
    let lhs = p.psi.compose(&p.ia.kron(p.b.mult())).unwrap();
    let rhs = p.psi_then_mult_b().compose(&p.psi.kron(&p.ib)).unwrap();
    r.check_maps(
        "multiplicative in B",
        "Ψ(A⊗μ_B) = (μ_B⊗A)(B⊗Ψ)(Ψ⊗B)",
        &lhs,
        &rhs,
        &[da, db, db],
    );
}

/// The three defining diagrams, each reported separately.
pub fn check_wdl(a: &Algebra, b: &Algebra, psi: &Mat) -> Report {
    if let Some(r) = shape_report(a, b, psi) {
        return r;
    }
    let p = Parts::new(a, b, psi);
    let mut r = Report::new("weak distributive law");
    check_first_two(&mut r, &p);
    r.check_maps(
        "weak unit",
        "(B⊗μ_A)(Ψ⊗A)(η_A⊗B⊗A) = (μ_B⊗A)(B⊗Ψ)(B⊗A⊗η_B)",
        &p.kappa_left(),
        &p.kappa_right(),
        &[p.db, p.da],
    );
    r
}

/// The two unit diagrams that, given multiplicativity, are equivalent to the
/// weak unit condition.
pub fn check_wdl_alt(a: &Algebra, b: &Algebra, psi: &Mat) -> Report {
    if let Some(r) = shape_report(a, b, psi) {
        return r;
    }
    let p = Parts::new(a, b, psi);
    let mut r = Report::new("weak unit (split form)");
    let lhs = psi.compose(&a.unit().kron(&p.ib)).unwrap();
    let ins = Mat::kron_all(&[&p.ib, a.unit(), b.unit()]);
    let rhs = p.psi_then_mult_b().compose(&ins).unwrap();
    r.check_maps("unit of A", "Ψ(η_A⊗B) = (μ_B⊗A)(B⊗Ψ)(B⊗η_A⊗η_B)", &lhs, &rhs, &[p.db]);
    let lhs = psi.compose(&p.ia.kron(b.unit())).unwrap();
    let ins = Mat::kron_all(&[a.unit(), b.unit(), &p.ia]);
    let rhs = p.psi_then_mult_a().compose(&ins).unwrap();
    r.check_maps("unit of B", "Ψ(A⊗η_B) = (B⊗μ_A)(Ψ⊗A)(η_A⊗η_B⊗A)", &lhs, &rhs, &[p.da]);
    r
}

/// Only the two multiplicativity diagrams.
pub fn check_wdl_multiplicative(a: &Algebra, b: &Algebra, psi: &Mat) -> Report {
    if let Some(r) = shape_report(a, b, psi) {
        return r;
    }
    let mut r = Report::new("multiplicativity");
    check_first_two(&mut r, &Parts::new(a, b, psi));
    r
}

/// `(B⊗μ_A)(Ψ⊗A)(η_A⊗B⊗A)`.
pub fn kappa_left(w: &Wdl) -> Mat {
    w.parts().kappa_left()
}

/// `(μ_B⊗A)(B⊗Ψ)(B⊗A⊗η_B)`.
pub fn kappa_right(w: &Wdl) -> Mat {
    w.parts().kappa_right()
}

/// `μ(B⊗η_A⊗η_B⊗A)`.
pub fn psibar_via_mult(w: &Wdl) -> Mat {
    let p = w.parts();
    let ins = Mat::kron_all(&[&p.ib, w.a.unit(), w.b.unit(), &p.ia]);
    p.nonunital_mult().compose(&ins).unwrap()
}

/// `Ψ̄` by the single right-hand formula, without cross-checks.
pub fn psibar_fast(w: &Wdl) -> Mat {
    kappa_right(w)
}

/// The associative, generally non-unital multiplication `(μ_B⊗μ_A)(B⊗Ψ⊗A)`
/// on `B⊗A`.
pub fn nonunital_mult(w: &Wdl) -> Result<Mat> {
    let p = w.parts();
    let mu = p.nonunital_mult();
    let n = p.da * p.db;
    let id = Mat::identity(n);
    let mut r = Report::new("non-unital multiplication");
    let lhs = mu.compose(&mu.kron(&id))?;
    let rhs = mu.compose(&id.kron(&mu))?;
    r.check_maps("associativity", "μ(μ⊗BA) = μ(BA⊗μ)", &lhs, &rhs, &[n, n, n]);
    r.into_result("non-unital multiplication")?;
    Ok(mu)
}

/// All identities satisfied by `Ψ̄` for a genuine weak distributive law,
/// including agreement of its three formulas.
pub fn psibar_identities(w: &Wdl) -> Report {
    let p = w.parts();
    let (da, db) = (p.da, p.db);
    let mut r = Report::new("canonical idempotent");
    let via_mult = psibar_via_mult(w);
    let left = p.kappa_left();
    let right = p.kappa_right();
    r.check_maps(
        "formulas agree (left)",
        "μ(B⊗η_A⊗η_B⊗A) = (B⊗μ_A)(Ψ⊗A)(η_A⊗B⊗A)",
        &via_mult,
        &left,
        &[db, da],
    );
    r.check_maps(
        "formulas agree (right)",
        "μ(B⊗η_A⊗η_B⊗A) = (μ_B⊗A)(B⊗Ψ)(B⊗A⊗η_B)",
        &via_mult,
        &right,
        &[db, da],
    );
    let pb = right;
    r.check_maps("absorbs psi", "Ψ̄Ψ = Ψ", &pb.compose(&w.psi).unwrap(), &w.psi, &[da, db]);
    r.check_maps("idempotent", "Ψ̄Ψ̄ = Ψ̄", &pb.compose(&pb).unwrap(), &pb, &[db, da]);
    let mb_a = w.b.mult().kron(&p.ia);
    r.check_maps(
        "left B-linear",
        "(μ_B⊗A)(B⊗Ψ̄) = Ψ̄(μ_B⊗A)",
        &mb_a.compose(&p.ib.kron(&pb)).unwrap(),
        &pb.compose(&mb_a).unwrap(),
        &[db, db, da],
    );
    let b_ma = p.ib.kron(w.a.mult());
    r.check_maps(
        "right A-linear",
        "(B⊗μ_A)(Ψ̄⊗A) = Ψ̄(B⊗μ_A)",
        &b_ma.compose(&pb.kron(&p.ia)).unwrap(),
        &pb.compose(&b_ma).unwrap(),
        &[db, da, da],
    );
    let mu = p.nonunital_mult();
    r.check_maps(
        "multiplication absorbs psibar",
        "μ(Ψ̄⊗Ψ̄) = μ",
        &mu.compose(&pb.kron(&pb)).unwrap(),
        &mu,
        &[db, da, db, da],
    );
    r.check_maps(
        "psibar absorbs multiplication",
        "Ψ̄μ = μ",
        &pb.compose(&mu).unwrap(),
        &mu,
        &[db, da, db, da],
    );
    r
}

/// `Ψ̄`, computed three ways and cross-checked.
///
/// Disagreement between the formulas means the weak unit axiom does not
/// hold and is reported as [`Error::InternalInconsistency`]; any other failed
/// identity as [`Error::CheckFailed`].
pub fn psibar(w: &Wdl) -> Result<Mat> {
    let report = psibar_identities(w);
    for name in ["formulas agree (left)", "formulas agree (right)"] {
        if report.get(name).is_some_and(|c| !c.passed) {
            return Err(Error::InternalInconsistency(format!(
                "the three formulas for the canonical idempotent disagree ({name})"
            )));
        }
    }
    report.into_result("canonical idempotent identities")?;
    Ok(psibar_fast(w))
}

/// The unital retract `B ⊗_Ψ A` of `(B⊗A, μ)` together with the canonical
/// homomorphisms from `A` and `B`.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    pub wdl: Wdl,
    pub psibar: Mat,
    pub splitting: Splitting,
    pub product: Algebra,
    pub alpha: AlgebraHom,
    pub beta: AlgebraHom,
    pub report: Report,
}

impl WreathProduct {
    pub fn proj(&self) -> &Mat {
        &self.splitting.proj
    }

    pub fn incl(&self) -> &Mat {
        &self.splitting.incl
    }

    /// The retract as a `B`-`A` bimodule via `μ_Ψ(β⊗−)` and `μ_Ψ(−⊗α)`.
    pub fn retract_bimodule(&self) -> BimoduleStructure {
        let r = &self.product;
        BimoduleStructure {
            left_algebra: self.wdl.b.clone(),
            right_algebra: self.wdl.a.clone(),
            dim: r.dim(),
            left_action: r.mult().compose(&self.beta.map.kron(&r.id())).unwrap(),
            right_action: r.mult().compose(&r.id().kron(&self.alpha.map)).unwrap(),
        }
    }
}

/// Splits `Ψ̄` and builds the weak wreath product, certifying every claim
/// made about it along the way.
pub fn weak_wreath(w: &Wdl) -> Result<WreathProduct> {
    check_wdl(&w.a, &w.b, &w.psi).into_result("weak distributive law")?;
    let pb = psibar(w)?;
    let splitting = split_idempotent(&pb)?;
    let p = w.parts();
    let (proj, incl) = (&splitting.proj, &splitting.incl);
    let mu = p.nonunital_mult();

    let mult = Mat::chain(&[&incl.kron(incl), &mu, proj])?;
    let unit = proj.compose(&w.b.unit().kron(w.a.unit()))?;
    let names = pb
        .pivot_columns()
        .into_iter()
        .map(|c| format!("[{}⊗{}]", w.b.basis()[c / p.da], w.a.basis()[c % p.da]))
        .collect();
    let product = Algebra::new(names, mult, unit)?;
    let alpha_map = proj.compose(&w.b.unit().kron(&p.ia))?;
    let beta_map = proj.compose(&p.ib.kron(w.a.unit()))?;

    let mut report = Report::new("weak wreath product");
    report.absorb("product", product.validate());
    report.absorb("alpha", is_algebra_hom(&alpha_map, &w.a, &product));
    report.absorb("beta", is_algebra_hom(&beta_map, &w.b, &product));
    let r = product.dim();
    let ir = Mat::identity(r);
    report.check_maps(
        "recovers projection",
        "μ_Ψ(β⊗α) = π",
        &product.mult().compose(&beta_map.kron(&alpha_map))?,
        proj,
        &[p.db, p.da],
    );
    report.check_maps(
        "left action",
        "π(μ_B⊗A)(B⊗ι) = μ_Ψ(β⊗P)",
        &Mat::chain(&[&p.ib.kron(incl), &w.b.mult().kron(&p.ia), proj])?,
        &product.mult().compose(&beta_map.kron(&ir))?,
        &[p.db, r],
    );
    report.check_maps(
        "right action",
        "π(B⊗μ_A)(ι⊗A) = μ_Ψ(P⊗α)",
        &Mat::chain(&[&incl.kron(&p.ia), &p.ib.kron(w.a.mult()), proj])?,
        &product.mult().compose(&ir.kron(&alpha_map))?,
        &[r, p.da],
    );
    let product_hom_alpha = AlgebraHom {
        src: w.a.clone(),
        dst: product.clone(),
        map: alpha_map,
    };
    let product_hom_beta = AlgebraHom {
        src: w.b.clone(),
        dst: product.clone(),
        map: beta_map,
    };
    let out = WreathProduct {
        wdl: w.clone(),
        psibar: pb,
        splitting: splitting.clone(),
        product,
        alpha: product_hom_alpha,
        beta: product_hom_beta,
        report: Report::default(),
    };
    let outer = BimoduleStructure::outer(&w.b, &w.a);
    let retract = out.retract_bimodule();
    report.absorb("retract bimodule", retract.validate());
    report.absorb("projection", is_bimodule_map(proj, &outer, &retract));
    report.absorb("inclusion", is_bimodule_map(incl, &retract, &outer));
    let report = report.into_result("weak wreath product")?;
    Ok(WreathProduct { report, ..out })
}
