//! 1-cells and 2-cells between weak distributive laws and between bilinear
//! factorizations, all over one base ring, so every 1-cell is a vector
//! space `V` and every 2-cell a matrix.
//!
//! A monad morphism `(V, ξ): A' → A` is a map `ξ: A'⊗V → V⊗A`. A 1-cell of
//! laws pairs two such maps with a common `V`; a 1-cell of factorizations
//! adds a third one on the factorized algebras. The functor `F` forgets the
//! third map and [`rho_from`] reconstructs it.

use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::factorization::{fact_of_wdl, pi_of, wdl_of_fact, BilinFact};
use crate::linalg::Mat;
use crate::report::Report;
use crate::wdl::{psibar_fast, Wdl};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadMorphCell {
    pub src: Algebra,
    pub dst: Algebra,
    pub v: usize,
    /// `A'⊗V → V⊗A`, shape `(v·a) × (a'·v)`.
    pub xi: Mat,
}

impl MonadMorphCell {
    pub fn new(src: Algebra, dst: Algebra, v: usize, xi: Mat) -> Result<Self> {
        let shape = (v * dst.dim(), src.dim() * v);
        if xi.shape() != shape {
            return Err(Error::Shape(format!(
                "ξ: A'⊗V → V⊗A must be {}x{}, got {:?}",
                shape.0,
                shape.1,
                xi.shape()
            )));
        }
        Ok(MonadMorphCell { src, dst, v, xi })
    }

    pub fn identity(a: &Algebra) -> Self {
        MonadMorphCell {
            src: a.clone(),
            dst: a.clone(),
            v: 1,
            xi: a.id(),
        }
    }

    /// An algebra map viewed as a morphism with `V = k`.
    pub fn from_hom(f: &AlgebraHom) -> Self {
        MonadMorphCell {
            src: f.src.clone(),
            dst: f.dst.clone(),
            v: 1,
            xi: f.map.clone(),
        }
    }

    /// `a ⊗ v ↦ v ⊗ a` on `V = kⁿ`.
    pub fn flip(a: &Algebra, v: usize) -> Self {
        MonadMorphCell {
            src: a.clone(),
            dst: a.clone(),
            v,
            xi: Mat::flip(a.dim(), v),
        }
    }

    /// `(V⊗ξ₂)(ξ₁⊗W)`, a morphism with carrier `V⊗W`.
    pub fn then(&self, next: &MonadMorphCell) -> Result<Self> {
        if self.dst != next.src {
            return Err(Error::Shape(
                "composable monad morphisms must share the middle algebra".into(),
            ));
        }
        let iv = Mat::identity(self.v);
        let iw = Mat::identity(next.v);
        let xi = iv.kron(&next.xi).compose(&self.xi.kron(&iw))?;
        MonadMorphCell::new(self.src.clone(), next.dst.clone(), self.v * next.v, xi)
    }
}

/// Multiplicativity and unitality of a monad morphism.
pub fn check_monad_morph(c: &MonadMorphCell) -> Report {
    let mut r = Report::new("monad morphism");
    let (a1, a, v) = (c.src.dim(), c.dst.dim(), c.v);
    if c.xi.shape() != (v * a, a1 * v) {
        r.check_condition("shape", "ξ: A'⊗V → V⊗A", false, vec![]);
        return r;
    }
    let iv = Mat::identity(v);
    let lhs = c.xi.compose(&c.src.mult().kron(&iv)).unwrap();
    let rhs = Mat::chain(&[&c.src.id().kron(&c.xi), &c.xi.kron(&c.dst.id()), &iv.kron(c.dst.mult())]).unwrap();
    r.check_maps("multiplicative", "ξ(μ'⊗V) = (V⊗μ)(ξ⊗A)(A'⊗ξ)", &lhs, &rhs, &[a1, a1, v]);
    let lhs = c.xi.compose(&c.src.unit().kron(&iv)).unwrap();
    let rhs = iv.kron(c.dst.unit());
    r.check_maps("unital", "ξ(η'⊗V) = V⊗η", &lhs, &rhs, &[v]);
    r
}

/// Shared access to the monad morphisms making up a 1-cell.
pub trait OneCell {
    fn carrier(&self) -> usize;
    fn components(&self) -> Vec<(&'static str, &MonadMorphCell)>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WdlOneCell {
    pub src: Wdl,
    pub dst: Wdl,
    pub xi: MonadMorphCell,
    pub zeta: MonadMorphCell,
}

impl OneCell for WdlOneCell {
    fn carrier(&self) -> usize {
        self.xi.v
    }

    fn components(&self) -> Vec<(&'static str, &MonadMorphCell)> {
        vec![("xi", &self.xi), ("zeta", &self.zeta)]
    }
}

impl WdlOneCell {
    pub fn identity(w: &Wdl) -> Self {
        WdlOneCell {
            src: w.clone(),
            dst: w.clone(),
            xi: MonadMorphCell::identity(&w.a),
            zeta: MonadMorphCell::identity(&w.b),
        }
    }

    /// Horizontal composite `self` followed by `next`.
    pub fn then(&self, next: &WdlOneCell) -> Result<Self> {
        Ok(WdlOneCell {
            src: self.src.clone(),
            dst: next.dst.clone(),
            xi: self.xi.then(&next.xi)?,
            zeta: self.zeta.then(&next.zeta)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactOneCell {
    pub src: BilinFact,
    pub dst: BilinFact,
    pub xi: MonadMorphCell,
    pub zeta: MonadMorphCell,
    pub rho: MonadMorphCell,
}

impl OneCell for FactOneCell {
    fn carrier(&self) -> usize {
        self.xi.v
    }

    fn components(&self) -> Vec<(&'static str, &MonadMorphCell)> {
        vec![("xi", &self.xi), ("zeta", &self.zeta), ("rho", &self.rho)]
    }
}

impl FactOneCell {
    pub fn identity(f: &BilinFact) -> Self {
        FactOneCell {
            src: f.clone(),
            dst: f.clone(),
            xi: MonadMorphCell::identity(&f.a),
            zeta: MonadMorphCell::identity(&f.b),
            rho: MonadMorphCell::identity(&f.r),
        }
    }

    pub fn then(&self, next: &FactOneCell) -> Result<Self> {
        Ok(FactOneCell {
            src: self.src.clone(),
            dst: next.dst.clone(),
            xi: self.xi.then(&next.xi)?,
            zeta: self.zeta.then(&next.zeta)?,
            rho: self.rho.then(&next.rho)?,
        })
    }
}

fn endpoint_report(r: &mut Report, cell: &impl OneCell, expected: &[(&Algebra, &Algebra)]) -> bool {
    let v = cell.carrier();
    let mut ok = true;
    for ((name, m), (src, dst)) in cell.components().into_iter().zip(expected) {
        let fits = m.v == v && m.src == **src && m.dst == **dst;
        r.check_condition(
            format!("{name} endpoints"),
            "components share V and match the 0-cells",
            fits,
            vec![m.v],
        );
        ok &= fits;
    }
    ok
}

/// `(V⊗Ψ)(ξ⊗B)(A'⊗ζ) = (V⊗Ψ̄)(ζ⊗A)(B'⊗ξ)(Ψ'⊗V)` on `A'⊗B'⊗V`, plus both
/// components being monad morphisms.
pub fn check_wdl_onecell(c: &WdlOneCell) -> Report {
    let mut r = Report::new("1-cell of weak distributive laws");
    let expected = [(&c.src.a, &c.dst.a), (&c.src.b, &c.dst.b)];
    if !endpoint_report(&mut r, c, &expected) {
        return r;
    }
    r.absorb("xi", check_monad_morph(&c.xi));
    r.absorb("zeta", check_monad_morph(&c.zeta));
    let v = c.carrier();
    let iv = Mat::identity(v);
    let (a1, b1) = (&c.src.a.id(), &c.src.b.id());
    let (ia, ib) = (&c.dst.a.id(), &c.dst.b.id());
    let lhs = Mat::chain(&[&a1.kron(&c.zeta.xi), &c.xi.xi.kron(ib), &iv.kron(&c.dst.psi)]).unwrap();
    let rhs = Mat::chain(&[
        &c.src.psi.kron(&iv),
        &b1.kron(&c.xi.xi),
        &c.zeta.xi.kron(ia),
        &iv.kron(&psibar_fast(&c.dst)),
    ])
    .unwrap();
    r.check_maps(
        "compatibility",
        "(V⊗Ψ)(ξ⊗B)(A'⊗ζ) = (V⊗Ψ̄)(ζ⊗A)(B'⊗ξ)(Ψ'⊗V)",
        &lhs,
        &rhs,
        &[c.src.a.dim(), c.src.b.dim(), v],
    );
    r
}

/// Both squares `ρ(α'⊗V) = (V⊗α)ξ` and `ρ(β'⊗V) = (V⊗β)ζ`, plus all three
/// components being monad morphisms.
pub fn check_fact_onecell(c: &FactOneCell) -> Report {
    let mut r = Report::new("1-cell of bilinear factorizations");
    let expected = [(&c.src.a, &c.dst.a), (&c.src.b, &c.dst.b), (&c.src.r, &c.dst.r)];
    if !endpoint_report(&mut r, c, &expected) {
        return r;
    }
    for (name, m) in c.components() {
        r.absorb(name, check_monad_morph(m));
    }
    let v = c.carrier();
    let iv = Mat::identity(v);
    let lhs = c.rho.xi.compose(&c.src.alpha.kron(&iv)).unwrap();
    let rhs = iv.kron(&c.dst.alpha).compose(&c.xi.xi).unwrap();
    r.check_maps("alpha square", "ρ(α'⊗V) = (V⊗α)ξ", &lhs, &rhs, &[c.src.a.dim(), v]);
    let lhs = c.rho.xi.compose(&c.src.beta.kron(&iv)).unwrap();
    let rhs = iv.kron(&c.dst.beta).compose(&c.zeta.xi).unwrap();
    r.check_maps("beta square", "ρ(β'⊗V) = (V⊗β)ζ", &lhs, &rhs, &[c.src.b.dim(), v]);
    r
}

/// `F` on 1-cells: forgets `ρ` and passes to the associated laws.
#[allow(non_snake_case)]
pub fn F_on_cells(c: &FactOneCell) -> Result<WdlOneCell> {
    check_fact_onecell(c).into_result("1-cell of bilinear factorizations")?;
    let out = WdlOneCell {
        src: wdl_of_fact(&c.src)?,
        dst: wdl_of_fact(&c.dst)?,
        xi: c.xi.clone(),
        zeta: c.zeta.clone(),
    };
    check_wdl_onecell(&out).into_result("image of a 1-cell under F")?;
    Ok(out)
}

/// `F` on 2-cells is the identity.
#[allow(non_snake_case)]
pub fn F_on_2cell(omega: &Mat) -> Mat {
    omega.clone()
}

/// `ρ = (V⊗π)(ζ⊗A)(B'⊗ξ)(ι'⊗V)`, with `ι'` from `src_fact` and `π` from
/// `dst_fact`. The factorizations must induce the cell's endpoint laws.
pub fn rho_from(c: &WdlOneCell, src_fact: &BilinFact, dst_fact: &BilinFact) -> Result<FactOneCell> {
    check_wdl_onecell(c).into_result("1-cell of weak distributive laws")?;
    for (what, f, w) in [("source", src_fact, &c.src), ("target", dst_fact, &c.dst)] {
        if wdl_of_fact(f)? != *w {
            return Err(Error::Shape(format!(
                "{what} factorization does not induce the {what} law"
            )));
        }
    }
    let iv = Mat::identity(c.carrier());
    let rho = Mat::chain(&[
        &src_fact.iota.kron(&iv),
        &src_fact.b.id().kron(&c.xi.xi),
        &c.zeta.xi.kron(&dst_fact.a.id()),
        &iv.kron(&pi_of(dst_fact)),
    ])?;
    let out = FactOneCell {
        src: src_fact.clone(),
        dst: dst_fact.clone(),
        xi: c.xi.clone(),
        zeta: c.zeta.clone(),
        rho: MonadMorphCell::new(src_fact.r.clone(), dst_fact.r.clone(), c.carrier(), rho)?,
    };
    check_fact_onecell(&out).into_result("lifted 1-cell")?;
    Ok(out)
}

/// [`rho_from`] against the weak wreath factorizations of both endpoints.
pub fn lift_to_wreaths(c: &WdlOneCell) -> Result<FactOneCell> {
    rho_from(c, &fact_of_wdl(&c.src)?, &fact_of_wdl(&c.dst)?)
}

/// `(ω⊗X)ξ = ξ'(X'⊗ω)` for every component, where `ω: V → V'`.
pub fn check_2cell<C: OneCell>(omega: &Mat, src: &C, dst: &C) -> Report {
    let mut r = Report::new("2-cell");
    let (v, v2) = (src.carrier(), dst.carrier());
    if omega.shape() != (v2, v) {
        r.check_condition("shape", format!("ω: V → V' must be {v2}x{v}"), false, vec![]);
        return r;
    }
    for ((name, m), (_, m2)) in src.components().into_iter().zip(dst.components()) {
        if m.src != m2.src || m.dst != m2.dst {
            r.check_condition(format!("{name} endpoints"), "parallel 1-cells", false, vec![]);
            continue;
        }
        let lhs = omega.kron(&m.dst.id()).compose(&m.xi).unwrap();
        let rhs = m2.xi.compose(&m.src.id().kron(omega)).unwrap();
        r.check_maps(name, "(ω⊗X)ξ = ξ'(X'⊗ω)", &lhs, &rhs, &[m.src.dim(), v]);
    }
    r
}

/// `Ψ̄(ζ⊗ξ)Ψ' = Ψ(ξ⊗ζ)` for algebra maps `ξ: A' → A`, `ζ: B' → B`, together
/// with its agreement with [`check_wdl_onecell`] at `V = k`.
pub fn check_trivial_onecell(xi: &AlgebraHom, zeta: &AlgebraHom, src: &Wdl, dst: &Wdl) -> Report {
    let mut r = Report::new("1-cell with trivial carrier");
    let fits = xi.src == src.a && xi.dst == dst.a && zeta.src == src.b && zeta.dst == dst.b;
    r.check_condition(
        "shape",
        "ξ: A' → A and ζ: B' → B between the laws' algebras",
        fits,
        vec![],
    );
    if !fits {
        return r;
    }
    r.absorb("xi", crate::algebra::is_algebra_hom(&xi.map, &xi.src, &xi.dst));
    r.absorb("zeta", crate::algebra::is_algebra_hom(&zeta.map, &zeta.src, &zeta.dst));
    let lhs = Mat::chain(&[&src.psi, &zeta.map.kron(&xi.map), &psibar_fast(dst)]).unwrap();
    let rhs = dst.psi.compose(&xi.map.kron(&zeta.map)).unwrap();
    let ok = r.check_maps(
        "compatibility",
        "Ψ̄(ζ⊗ξ)Ψ' = Ψ(ξ⊗ζ)",
        &lhs,
        &rhs,
        &[src.a.dim(), src.b.dim()],
    );
    let general = check_wdl_onecell(&WdlOneCell {
        src: src.clone(),
        dst: dst.clone(),
        xi: MonadMorphCell::from_hom(xi),
        zeta: MonadMorphCell::from_hom(zeta),
    });
    let general_ok = general.get("compatibility").is_some_and(|c| c.passed);
    r.check_condition(
        "agrees with general 1-cell condition",
        "V = k specialization",
        ok == general_ok,
        vec![],
    );
    r
}

/// The 1-cell from the trivial law on `k` into `w` given by the units.
pub fn unit_onecell(w: &Wdl) -> WdlOneCell {
    let k = Algebra::ground();
    WdlOneCell {
        src: Wdl::flip(&k, &k),
        dst: w.clone(),
        xi: MonadMorphCell {
            src: k.clone(),
            dst: w.a.clone(),
            v: 1,
            xi: w.a.unit().clone(),
        },
        zeta: MonadMorphCell {
            src: k,
            dst: w.b.clone(),
            v: 1,
            xi: w.b.unit().clone(),
        },
    }
}
