//! Weak bialgebras, their module algebras and the smash product law
//! `a⊗h ↦ h₁⊗a↼h₂`, compared with the law induced over `R = ⊓̄(H)ᵒᵖ`.

use crate::algebra::{subalgebra_on_columns, tensor_algebra, Algebra};
use crate::error::{Error, Result};
use crate::gallery::frobenius::{
    project_law, sf_weak_dl, tensor_over_r, validate_frobenius, FrobeniusStructure, Module, SfLaw,
};
use crate::linalg::{int, vec_kron, Mat};
use crate::report::Report;
use crate::wdl::{check_wdl, Wdl};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBialgebra {
    pub h: Algebra,
    /// `δ: H → H⊗H`.
    pub comult: Mat,
    /// `ε: H → k`.
    pub counit: Mat,
}

impl WeakBialgebra {
    pub fn new(h: Algebra, comult: Mat, counit: Mat) -> Result<Self> {
        let n = h.dim();
        if comult.shape() != (n * n, n) || counit.shape() != (1, n) {
            return Err(Error::Shape(format!(
                "comultiplication must be {}x{n} and counit 1x{n}, got {:?} and {:?}",
                n * n,
                comult.shape(),
                counit.shape()
            )));
        }
        Ok(WeakBialgebra { h, comult, counit })
    }

    /// Group-like basis: `δ(x) = x⊗x`, `ε(x) = 1` on every basis element.
    pub fn grouplike(h: Algebra) -> Self {
        let n = h.dim();
        let comult = Mat::from_fn(n * n, n, |r, c| int(i64::from(r == c * n + c)));
        let counit = Mat::from_fn(1, n, |_, _| int(1));
        WeakBialgebra { h, comult, counit }
    }

    /// The algebra of the discrete groupoid on `n` objects, `kⁿ`.
    pub fn discrete_groupoid(n: usize) -> Self {
        Self::grouplike(Algebra::diagonal(n))
    }

    /// The algebra of the pair groupoid on `n` objects: matrix units `e_ij`.
    pub fn pair_groupoid(n: usize) -> Self {
        let names: Vec<String> = (0..n * n).map(|x| format!("e{}{}", x / n + 1, x % n + 1)).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table.push((i * n + j, j * n + l, i * n + l, int(1)));
                }
            }
        }
        let unit = (0..n * n).map(|x| int(i64::from(x / n == x % n))).collect();
        Self::grouplike(Algebra::from_table(&names, unit, &table).unwrap())
    }

    /// `kℤ₂` with `δ(g) = g⊗g`.
    pub fn group_z2() -> Self {
        Self::grouplike(Algebra::group_z2())
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    /// `δ(1) = 1₁⊗1₂`.
    pub fn comult_one(&self) -> Mat {
        self.comult.compose(self.h.unit()).unwrap()
    }

    /// `εμ: H⊗H → k`.
    fn pairing(&self) -> Mat {
        self.counit.compose(self.h.mult()).unwrap()
    }

    /// `H⊗H` with factorwise multiplication.
    fn square(&self) -> Algebra {
        tensor_algebra(&self.h, &self.h)
    }
}

/// `⊓(h) = 1₁ε(h1₂)`.
pub fn cap(w: &WeakBialgebra) -> Mat {
    let n = w.dim();
    let tail = w.pairing().compose(&Mat::flip(n, n)).unwrap();
    Mat::chain(&[&w.comult_one().kron(&w.h.id()), &w.h.id().kron(&tail)]).unwrap()
}

/// `⊓̄(h) = ε(h1₁)1₂`.
pub fn cap_bar(w: &WeakBialgebra) -> Mat {
    Mat::chain(&[&w.h.id().kron(&w.comult_one()), &w.pairing().kron(&w.h.id())]).unwrap()
}

/// `(⊓, ⊓̄)`.
pub fn cap_maps(w: &WeakBialgebra) -> (Mat, Mat) {
    (cap(w), cap_bar(w))
}

/// Coalgebra, multiplicativity and both weak unit axioms.
fn axioms(w: &WeakBialgebra) -> Report {
    let n = w.dim();
    let (id, d, e) = (w.h.id(), &w.comult, &w.counit);
    let mut r = Report::new("weak bialgebra axioms");
    r.absorb("H", w.h.validate());
    r.check_maps(
        "coassociative",
        "(δ⊗H)δ = (H⊗δ)δ",
        &Mat::chain(&[d, &d.kron(&id)]).unwrap(),
        &Mat::chain(&[d, &id.kron(d)]).unwrap(),
        &[n],
    );
    r.check_maps(
        "counit (left)",
        "(ε⊗H)δ = H",
        &Mat::chain(&[d, &e.kron(&id)]).unwrap(),
        &id,
        &[n],
    );
    r.check_maps(
        "counit (right)",
        "(H⊗ε)δ = H",
        &Mat::chain(&[d, &id.kron(e)]).unwrap(),
        &id,
        &[n],
    );
    let hh = w.square();
    r.check_maps(
        "multiplicative comultiplication",
        "δμ = μ_{H⊗H}(δ⊗δ)",
        &Mat::chain(&[w.h.mult(), d]).unwrap(),
        &Mat::chain(&[&d.kron(d), hh.mult()]).unwrap(),
        &[n, n],
    );
    let eps3 = Mat::chain(&[&w.h.mult().kron(&id), w.h.mult(), e]).unwrap();
    let pp = w.pairing().kron(&w.pairing());
    let split = Mat::chain(&[&Mat::kron_all(&[&id, d, &id]), &pp]).unwrap();
    let split_op = Mat::chain(&[&Mat::kron_all(&[&id, &Mat::flip(n, n).compose(d).unwrap(), &id]), &pp]).unwrap();
    r.check_maps("weak counit (left)", "ε(ab₁)ε(b₂c) = ε(abc)", &split, &eps3, &[n, n, n]);
    r.check_maps(
        "weak counit (right)",
        "ε(ab₂)ε(b₁c) = ε(abc)",
        &split_op,
        &eps3,
        &[n, n, n],
    );
    let hhh = tensor_algebra(&w.h, &hh);
    let one = w.h.one();
    let d1 = w.comult_one().col(0);
    let left = vec_kron(&d1, &one);
    let right = vec_kron(&one, &d1);
    let d2 = Mat::chain(&[&w.comult_one(), &d.kron(&id)]).unwrap();
    r.check_maps(
        "weak unit (left)",
        "(δ(1)⊗1)(1⊗δ(1)) = δ²(1)",
        &Mat::column(&hhh.mul(&left, &right)),
        &d2,
        &[1],
    );
    r.check_maps(
        "weak unit (right)",
        "(1⊗δ(1))(δ(1)⊗1) = δ²(1)",
        &Mat::column(&hhh.mul(&right, &left)),
        &d2,
        &[1],
    );
    r
}

/// The identities relating `⊓`, `⊓̄`, `δ` and `ε`.
fn cap_identities(w: &WeakBialgebra) -> Report {
    let n = w.dim();
    let (id, mu, e) = (w.h.id(), w.h.mult(), &w.counit);
    let (c, cb) = cap_maps(w);
    let ch = |maps: &[&Mat]| Mat::chain(maps).unwrap();
    let mut r = Report::new("cap identities");
    r.check_maps("counit of cap", "ε⊓ = ε", &ch(&[&c, e]), e, &[n]);
    r.check_maps("counit of cap bar", "ε⊓̄ = ε", &ch(&[&cb, e]), e, &[n]);
    let spread = |f: &Mat| ch(&[f, &w.comult_one().kron(&id), &id.kron(&Mat::flip(n, n))]);
    r.check_maps(
        "comultiplication of cap",
        "δ⊓(h) = 1₁⊗⊓(h)1₂",
        &ch(&[&c, &w.comult]),
        &ch(&[&spread(&c), &id.kron(mu)]),
        &[n],
    );
    r.check_maps(
        "comultiplication of cap bar",
        "δ⊓̄(h) = 1₁⊓̄(h)⊗1₂",
        &ch(&[&cb, &w.comult]),
        &ch(&[&spread(&cb), &mu.kron(&id)]),
        &[n],
    );
    for (f, fname) in [(&c, "⊓"), (&cb, "⊓̄")] {
        let plain = ch(&[mu, f]);
        r.check_maps(
            format!("{fname} absorbs ⊓ on the left factor"),
            format!("{fname}(⊓(h)h′) = {fname}(hh′)"),
            &ch(&[&c.kron(&id), mu, f]),
            &plain,
            &[n, n],
        );
        r.check_maps(
            format!("{fname} absorbs ⊓̄ on the left factor"),
            format!("{fname}(⊓̄(h)h′) = {fname}(hh′)"),
            &ch(&[&cb.kron(&id), mu, f]),
            &plain,
            &[n, n],
        );
    }
    let both = cb.kron(&c);
    r.check_maps(
        "caps commute",
        "⊓̄(h)⊓(h′) = ⊓(h′)⊓̄(h)",
        &ch(&[&both, mu]),
        &ch(&[&both, &Mat::flip(n, n), mu]),
        &[n, n],
    );
    r.check_maps(
        "cap multiplicative",
        "⊓(h⊓(h′)) = ⊓(h)⊓(h′)",
        &ch(&[&id.kron(&c), mu, &c]),
        &ch(&[&c.kron(&c), mu]),
        &[n, n],
    );
    r.check_maps(
        "cap bar multiplicative",
        "⊓̄(h⊓̄(h′)) = ⊓̄(h)⊓̄(h′)",
        &ch(&[&id.kron(&cb), mu, &cb]),
        &ch(&[&cb.kron(&cb), mu]),
        &[n, n],
    );
    r
}

/// The base algebra `R = ⊓̄(H)ᵒᵖ`, its inclusion into `H` and its separable
/// Frobenius structure with functional `ε` and basis `⊓̄(1₁)⊗1₂`.
#[derive(Clone, Debug)]
pub struct BaseAlgebra {
    pub incl: Mat,
    pub frobenius: FrobeniusStructure,
}

pub fn base_algebra(w: &WeakBialgebra) -> Result<BaseAlgebra> {
    let cb = cap_bar(w);
    let incl = cb.select_cols(&cb.pivot_columns());
    let names = cb
        .pivot_columns()
        .iter()
        .map(|&p| format!("⊓̄({})", w.h.basis()[p]))
        .collect();
    let image = subalgebra_on_columns(&w.h, &incl, w.h.unit(), names)?;
    let element = Mat::chain(&[&w.comult_one(), &cb.kron(&w.h.id())])?;
    let coords = incl
        .kron(&incl)
        .solve(&element)
        .map_err(|_| Error::Shape("⊓̄(1₁)⊗1₂ does not lie in ⊓̄(H)⊗⊓̄(H)".into()))?;
    let frobenius = FrobeniusStructure {
        r: image.opposite(),
        functional: w.counit.compose(&incl)?,
        element: coords.col(0),
    };
    Ok(BaseAlgebra { incl, frobenius })
}

/// All axioms, the cap identities and the Frobenius structure on the base.
pub fn validate_weak_bialgebra(w: &WeakBialgebra) -> Report {
    let mut r = Report::new("weak bialgebra");
    r.absorb("axioms", axioms(w));
    if !r.passed() {
        return r;
    }
    r.absorb("caps", cap_identities(w));
    match base_algebra(w) {
        Ok(base) => r.absorb("base", validate_frobenius(&base.frobenius)),
        Err(e) => {
            r.check_condition("base", format!("⊓̄(H) is a subalgebra: {e}"), false, vec![]);
        }
    }
    r
}

/// The conditions that make a weak bialgebra an ordinary one.
pub fn bialgebra_strictness(w: &WeakBialgebra) -> Report {
    let n = w.dim();
    let one = w.h.unit();
    let mut r = Report::new("bialgebra");
    r.check_maps(
        "unital comultiplication",
        "δ(1) = 1⊗1",
        &w.comult_one(),
        &one.kron(one),
        &[1],
    );
    r.check_maps(
        "multiplicative counit",
        "ε(ab) = ε(a)ε(b)",
        &w.pairing(),
        &w.counit.kron(&w.counit),
        &[n, n],
    );
    r
}

/// A right `H`-module algebra with action `A⊗H → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub a: Algebra,
    pub action: Mat,
}

impl ModuleAlgebra {
    pub fn new(a: Algebra, action: Mat, h_dim: usize) -> Result<Self> {
        if action.shape() != (a.dim(), a.dim() * h_dim) {
            return Err(Error::Shape(format!(
                "action A⊗H → A must be {}x{}, got {:?}",
                a.dim(),
                a.dim() * h_dim,
                action.shape()
            )));
        }
        Ok(ModuleAlgebra { a, action })
    }

    /// `a↼h = aε(h)`.
    pub fn trivial(a: &Algebra, w: &WeakBialgebra) -> Self {
        ModuleAlgebra {
            a: a.clone(),
            action: a.id().kron(&w.counit),
        }
    }

    /// `kⁿ` acted on by the discrete groupoid: `q_k↼p_i = δ_ki q_k`.
    pub fn discrete_objects(n: usize) -> Self {
        let action = Mat::from_fn(n, n * n, |k, c| int(i64::from(c == k * n + k)));
        ModuleAlgebra {
            a: Algebra::diagonal(n),
            action,
        }
    }

    /// `kⁿ` acted on by the pair groupoid: `q_k↼e_ij = δ_ki q_j`.
    pub fn pair_objects(n: usize) -> Self {
        let action = Mat::from_fn(n, n * n * n, |t, c| {
            let (k, e) = (c / (n * n), c % (n * n));
            int(i64::from(e / n == k && e % n == t))
        });
        ModuleAlgebra {
            a: Algebra::diagonal(n),
            action,
        }
    }

    /// `r ↦ 1↼r` on the base algebra.
    fn unit_action(&self, incl: &Mat) -> Mat {
        Mat::chain(&[&self.a.unit().kron(incl), &self.action]).unwrap()
    }
}

pub fn validate_module_algebra(w: &WeakBialgebra, m: &ModuleAlgebra) -> Report {
    let (da, dh) = (m.a.dim(), w.dim());
    let (ia, ih, act) = (m.a.id(), w.h.id(), &m.action);
    let ch = |maps: &[&Mat]| Mat::chain(maps).unwrap();
    let mut r = Report::new("module algebra");
    r.absorb("A", m.a.validate());
    r.check_maps(
        "associative action",
        "(a↼h)↼h′ = a↼hh′",
        &ch(&[&act.kron(&ih), act]),
        &ch(&[&ia.kron(w.h.mult()), act]),
        &[da, dh, dh],
    );
    r.check_maps(
        "unital action",
        "a↼1 = a",
        &ch(&[&ia.kron(w.h.unit()), act]),
        &ia,
        &[da],
    );
    let lhs = ch(&[
        &Mat::kron_all(&[&ia, &ia, &w.comult]),
        &Mat::kron_all(&[&ia, &Mat::flip(da, dh), &ih]),
        &act.kron(act),
        m.a.mult(),
    ]);
    r.check_maps(
        "multiplication is H-linear",
        "(a↼h₁)(a′↼h₂) = aa′↼h",
        &lhs,
        &ch(&[&m.a.mult().kron(&ih), act]),
        &[da, da, dh],
    );
    let one = m.a.unit().kron(&ih);
    r.check_maps(
        "unit",
        "1↼h = 1↼⊓̄(h)",
        &ch(&[&one, act]),
        &ch(&[&cap_bar(w), &one, act]),
        &[dh],
    );
    r
}

/// The smash product law and its realization over `R = ⊓̄(H)ᵒᵖ`.
#[derive(Clone, Debug)]
pub struct SmashLaw {
    pub wdl: Wdl,
    pub base: BaseAlgebra,
    pub sf: SfLaw,
    pub report: Report,
}

/// `Ψ(a⊗h) = h₁⊗a↼h₂`.
pub fn smash_psi(w: &WeakBialgebra, m: &ModuleAlgebra) -> Mat {
    let (da, dh) = (m.a.dim(), w.dim());
    Mat::chain(&[
        &m.a.id().kron(&w.comult),
        &Mat::flip(da, dh).kron(&w.h.id()),
        &w.h.id().kron(&m.action),
    ])
    .unwrap()
}

pub fn smash_wdl(w: &WeakBialgebra, m: &ModuleAlgebra) -> Result<SmashLaw> {
    let mut pre = Report::new("smash product data");
    pre.absorb("weak bialgebra", validate_weak_bialgebra(w));
    pre.absorb("module algebra", validate_module_algebra(w, m));
    pre.into_result("smash product data")?;

    let wdl = Wdl::new(m.a.clone(), w.h.clone(), smash_psi(w, m))?;
    let mut report = Report::new("smash product law");
    report.absorb("law", check_wdl(&wdl.a, &wdl.b, &wdl.psi));
    report = report.into_result("smash product law")?;

    let base = base_algebra(w)?;
    let eta_a = m.unit_action(&base.incl);
    let eta_h = cap(w).compose(&base.incl)?;
    let s = &base.frobenius;
    let ab = tensor_over_r(&Module::right_via(&m.a, &eta_a), &Module::left_via(&w.h, &eta_h), s)?;
    let ba = tensor_over_r(&Module::right_via(&w.h, &eta_h), &Module::left_via(&m.a, &eta_a), s)?;
    let phi = project_law(&ab, &ba, &wdl.psi);
    let sf = sf_weak_dl(&m.a, &w.h, &eta_a, &eta_h, &phi, s)?;
    report.check_maps(
        "agrees with the law over R",
        "ι Φ π = Ψ",
        &sf.wdl.psi,
        &wdl.psi,
        &[m.a.dim(), w.dim()],
    );
    let report = report.into_result("smash product law")?;
    Ok(SmashLaw { wdl, base, sf, report })
}
