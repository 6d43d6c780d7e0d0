//! Finite-dimensional unital associative algebras given by structure constants.
//!
//! The multiplication of an algebra of dimension `n` is stored as a single
//! `n × n²` matrix acting on the tensor square, and the unit as an `n × 1`
//! column. Every axiom then becomes an equality of matrices built with
//! [`Mat::kron`] and [`Mat::compose`].

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, unit_vec, Mat, Scalar};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    basis: Vec<String>,
    mult: Mat,
    unit: Mat,
}

impl Algebra {
    /// Checks shapes only; use [`Algebra::validate`] for the axioms.
    pub fn new(basis: Vec<String>, mult: Mat, unit: Mat) -> Result<Self> {
        let n = basis.len();
        if mult.shape() != (n, n * n) {
            return Err(Error::Shape(format!(
                "multiplication of a {n}-dimensional algebra must be {n}x{}, got {:?}",
                n * n,
                mult.shape()
            )));
        }
        if unit.shape() != (n, 1) {
            return Err(Error::Shape(format!(
                "unit of a {n}-dimensional algebra must be {n}x1, got {:?}",
                unit.shape()
            )));
        }
        Ok(Algebra { basis, mult, unit })
    }

    /// Builds an algebra from sparse structure constants `(i, j, k, c)`,
    /// meaning `e_i e_j` has coefficient `c` on `e_k`.
    pub fn from_table(basis: &[&str], unit: Vec<Scalar>, table: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let n = basis.len();
        let mut mult = Mat::zeros(n, n * n);
        for (i, j, k, c) in table {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!(
                    "structure constant index ({i},{j},{k}) out of range for dim {n}"
                )));
            }
            let cur = mult.get(*k, i * n + j) + c;
            mult.set(*k, i * n + j, cur);
        }
        if unit.len() != n {
            return Err(Error::Shape(format!(
                "unit has {} coordinates, expected {n}",
                unit.len()
            )));
        }
        Algebra::new(basis.iter().map(|s| s.to_string()).collect(), mult, Mat::column(&unit))
    }

    /// The ground field `k`.
    pub fn ground() -> Self {
        Algebra::from_table(&["1"], vec![int(1)], &[(0, 0, 0, int(1))]).unwrap()
    }

    /// The group algebra of the cyclic group of order two, basis `1, g`.
    pub fn group_z2() -> Self {
        let one = int(1);
        Algebra::from_table(
            &["1", "g"],
            vec![int(1), int(0)],
            &[
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one),
            ],
        )
        .unwrap()
    }

    /// `k × … × k` with its minimal orthogonal idempotents `p1, …, pn`.
    pub fn diagonal(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<_> = (0..n).map(|i| (i, i, i, int(1))).collect();
        Algebra::from_table(&refs, vec![int(1); n], &table).unwrap()
    }

    /// Upper triangular 2×2 matrices in the matrix-unit basis `e11, e12, e22`.
    pub fn upper_triangular() -> Self {
        let one = int(1);
        Algebra::from_table(
            &["e11", "e12", "e22"],
            vec![int(1), int(0), int(1)],
            &[
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 2, 1, one.clone()),
                (2, 2, 2, one),
            ],
        )
        .unwrap()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.col(0)
    }

    pub fn id(&self) -> Mat {
        Mat::identity(self.dim())
    }

    pub fn basis_elem(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.dim(), i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&crate::linalg::vec_kron(x, y))
    }

    /// The matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        self.mult.compose(&Mat::column(x).kron(&self.id())).unwrap()
    }

    /// The matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        self.mult.compose(&self.id().kron(&Mat::column(x))).unwrap()
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        Algebra {
            basis: self.basis.iter().map(|b| format!("{b}°")).collect(),
            mult: self.mult.compose(&Mat::flip(n, n)).unwrap(),
            unit: self.unit.clone(),
        }
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.basis = names;
        self
    }

    /// Checks associativity and two-sided unitality on all basis inputs.
    pub fn validate(&self) -> Report {
        let n = self.dim();
        let id = self.id();
        let mut r = Report::new("algebra");
        let lhs = self.mult.compose(&self.mult.kron(&id)).unwrap();
        let rhs = self.mult.compose(&id.kron(&self.mult)).unwrap();
        r.check_maps("associativity", "μ(μ⊗A) = μ(A⊗μ)", &lhs, &rhs, &[n, n, n]);
        let left_unit = self.mult.compose(&self.unit.kron(&id)).unwrap();
        r.check_maps("left unit", "μ(η⊗A) = A", &left_unit, &id, &[n]);
        let right_unit = self.mult.compose(&id.kron(&self.unit)).unwrap();
        r.check_maps("right unit", "μ(A⊗η) = A", &right_unit, &id, &[n]);
        r
    }
}

/// Multiplicativity and unitality of `map: src → dst`.
pub fn is_algebra_hom(map: &Mat, src: &Algebra, dst: &Algebra) -> Report {
    let mut r = Report::new("algebra homomorphism");
    if map.shape() != (dst.dim(), src.dim()) {
        r.check_condition(
            "shape",
            format!("map must be {}x{}, got {:?}", dst.dim(), src.dim(), map.shape()),
            false,
            vec![],
        );
        return r;
    }
    check_multiplicative(&mut r, map, src, dst);
    let lhs = map.compose(src.unit()).unwrap();
    r.check_maps("unital", "f η = η'", &lhs, dst.unit(), &[1]);
    r
}

fn check_multiplicative(r: &mut Report, map: &Mat, src: &Algebra, dst: &Algebra) -> bool {
    let lhs = map.compose(src.mult()).unwrap();
    let rhs = dst.mult().compose(&map.kron(map)).unwrap();
    r.check_maps("multiplicative", "f μ = μ'(f⊗f)", &lhs, &rhs, &[src.dim(), src.dim()])
}

/// A checked unital algebra homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    pub src: Algebra,
    pub dst: Algebra,
    pub map: Mat,
}

impl AlgebraHom {
    pub fn new(src: Algebra, dst: Algebra, map: Mat) -> Result<Self> {
        is_algebra_hom(&map, &src, &dst).into_result("algebra homomorphism")?;
        Ok(AlgebraHom { src, dst, map })
    }

    pub fn identity(a: &Algebra) -> Self {
        AlgebraHom {
            src: a.clone(),
            dst: a.clone(),
            map: a.id(),
        }
    }
}

/// `⊕ᵢ Aᵢ` together with the (non-unital) summand injections and the
/// block projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub algebra: Algebra,
    pub injections: Vec<Mat>,
    pub projections: Vec<Mat>,
}

pub fn direct_sum(algebras: &[Algebra]) -> Result<DirectSum> {
    if algebras.is_empty() {
        return Err(Error::Shape("direct sum of an empty list".into()));
    }
    let n: usize = algebras.iter().map(Algebra::dim).sum();
    let offsets: Vec<usize> = algebras
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.dim();
            Some(o)
        })
        .collect();
    let mut basis = Vec::with_capacity(n);
    let mut mult = Mat::zeros(n, n * n);
    let mut unit = vec![Scalar::zero(); n];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (s, (a, &off)) in algebras.iter().zip(&offsets).enumerate() {
        let d = a.dim();
        basis.extend(a.basis().iter().map(|b| format!("{s}.{b}")));
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = a.mult().get(k, i * d + j);
                    if !c.is_zero() {
                        mult.set(off + k, (off + i) * n + off + j, c.clone());
                    }
                }
            }
            unit[off + i] = a.unit().get(i, 0).clone();
        }
        injections.push(Mat::from_fn(n, d, |i, j| {
            if i == off + j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }));
        projections.push(Mat::from_fn(d, n, |i, j| {
            if j == off + i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }));
    }
    Ok(DirectSum {
        algebra: Algebra::new(basis, mult, Mat::column(&unit))?,
        injections,
        projections,
    })
}

/// `A ⊗ B` with the factorwise multiplication `(a⊗b)(a'⊗b') = aa'⊗bb'`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let (da, db) = (a.dim(), b.dim());
    let middle = Mat::kron_all(&[&a.id(), &Mat::flip(db, da), &b.id()]);
    let mult = a.mult().kron(b.mult()).compose(&middle).unwrap();
    let unit = a.unit().kron(b.unit());
    let basis = a
        .basis()
        .iter()
        .flat_map(|x| b.basis().iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    Algebra { basis, mult, unit }
}

/// A subalgebra realized in its own pivot basis.
#[derive(Clone, Debug)]
pub struct ImageSubalgebra {
    pub algebra: Algebra,
    /// Columns are the chosen basis of the image inside the ambient algebra.
    pub inclusion: Mat,
    /// Coordinates of `f(x)` in that basis; `inclusion · corestriction = f`.
    pub corestriction: Mat,
}

/// Image of a unital homomorphism; its unit is `f(1)`.
pub fn image_subalgebra(f: &AlgebraHom) -> Result<ImageSubalgebra> {
    is_algebra_hom(&f.map, &f.src, &f.dst).into_result("image_subalgebra: input homomorphism")?;
    image_of_multiplicative(&f.src, &f.dst, &f.map)
}

/// Image of a merely multiplicative map `src → dst`. The image is an algebra
/// whose unit `map(1)` may differ from the unit of `dst`.
pub fn image_of_multiplicative(src: &Algebra, dst: &Algebra, map: &Mat) -> Result<ImageSubalgebra> {
    let mut r = Report::new("image");
    if !check_multiplicative(&mut r, map, src, dst) {
        return Err(Error::check_failed("image of a non-multiplicative map", r));
    }
    let pivots = map.pivot_columns();
    let inclusion = map.select_cols(&pivots);
    let corestriction = inclusion.solve(map)?;
    let names = pivots.iter().map(|&p| format!("im({})", src.basis()[p])).collect();
    let unit = map.compose(src.unit())?;
    let algebra = subalgebra_on_columns(dst, &inclusion, &unit, names)?;
    Ok(ImageSubalgebra {
        algebra,
        inclusion,
        corestriction,
    })
}

/// Structure constants of the subalgebra spanned by the (independent)
/// columns of `incl`, with unit given as an ambient vector.
pub fn subalgebra_on_columns(ambient: &Algebra, incl: &Mat, unit: &Mat, names: Vec<String>) -> Result<Algebra> {
    let products = ambient.mult().compose(&incl.kron(incl))?;
    let mult = incl
        .solve(&products)
        .map_err(|_| Error::Shape("span is not closed under multiplication".into()))?;
    let unit = incl
        .solve(unit)
        .map_err(|_| Error::Shape("unit does not lie in the span".into()))?;
    Algebra::new(names, mult, unit)
}

/// A `B`-`A` bimodule: left action `B ⊗ M → M`, right action `M ⊗ A → M`.
#[derive(Clone, Debug)]
pub struct BimoduleStructure {
    pub left_algebra: Algebra,
    pub right_algebra: Algebra,
    pub dim: usize,
    pub left_action: Mat,
    pub right_action: Mat,
}

impl BimoduleStructure {
    /// `B ⊗ A` with `B` acting by multiplication on the left factor and `A`
    /// on the right factor.
    pub fn outer(b: &Algebra, a: &Algebra) -> Self {
        BimoduleStructure {
            left_algebra: b.clone(),
            right_algebra: a.clone(),
            dim: b.dim() * a.dim(),
            left_action: b.mult().kron(&a.id()),
            right_action: b.id().kron(a.mult()),
        }
    }

    pub fn validate(&self) -> Report {
        let (b, a, n) = (&self.left_algebra, &self.right_algebra, self.dim);
        let idn = Mat::identity(n);
        let mut r = Report::new("bimodule");
        let lhs = self.left_action.compose(&b.mult().kron(&idn)).unwrap();
        let rhs = self.left_action.compose(&b.id().kron(&self.left_action)).unwrap();
        r.check_maps(
            "left associative",
            "λ(μ⊗M) = λ(B⊗λ)",
            &lhs,
            &rhs,
            &[b.dim(), b.dim(), n],
        );
        let lu = self.left_action.compose(&b.unit().kron(&idn)).unwrap();
        r.check_maps("left unital", "λ(η⊗M) = M", &lu, &idn, &[n]);
        let lhs = self.right_action.compose(&self.right_action.kron(&a.id())).unwrap();
        let rhs = self.right_action.compose(&idn.kron(a.mult())).unwrap();
        r.check_maps(
            "right associative",
            "ρ(ρ⊗A) = ρ(M⊗μ)",
            &lhs,
            &rhs,
            &[n, a.dim(), a.dim()],
        );
        let ru = self.right_action.compose(&idn.kron(a.unit())).unwrap();
        r.check_maps("right unital", "ρ(M⊗η) = M", &ru, &idn, &[n]);
        let lr = self.right_action.compose(&self.left_action.kron(&a.id())).unwrap();
        let rl = self.left_action.compose(&b.id().kron(&self.right_action)).unwrap();
        r.check_maps("actions commute", "ρ(λ⊗A) = λ(B⊗ρ)", &lr, &rl, &[b.dim(), n, a.dim()]);
        r
    }
}

/// `R` as a `B`-`A` bimodule through `μ_R(β⊗R)` and `μ_R(R⊗α)`.
pub fn induced_bimodule(r: &Algebra, alpha: &AlgebraHom, beta: &AlgebraHom) -> Result<BimoduleStructure> {
    if alpha.dst != *r || beta.dst != *r {
        return Err(Error::Shape("induced_bimodule: homomorphisms must land in R".into()));
    }
    Ok(BimoduleStructure {
        left_algebra: beta.src.clone(),
        right_algebra: alpha.src.clone(),
        dim: r.dim(),
        left_action: r.mult().compose(&beta.map.kron(&r.id()))?,
        right_action: r.mult().compose(&r.id().kron(&alpha.map))?,
    })
}

/// Whether `f: src → dst` intertwines both actions.
pub fn is_bimodule_map(f: &Mat, src: &BimoduleStructure, dst: &BimoduleStructure) -> Report {
    let mut r = Report::new("bimodule map");
    if f.shape() != (dst.dim, src.dim)
        || src.left_algebra.dim() != dst.left_algebra.dim()
        || src.right_algebra.dim() != dst.right_algebra.dim()
    {
        r.check_condition(
            "shape",
            "f: M → N between bimodules over the same algebras",
            false,
            vec![],
        );
        return r;
    }
    let (b, a) = (&src.left_algebra, &src.right_algebra);
    let lhs = f.compose(&src.left_action).unwrap();
    let rhs = dst.left_action.compose(&b.id().kron(f)).unwrap();
    r.check_maps("left linear", "f λ = λ'(B⊗f)", &lhs, &rhs, &[b.dim(), src.dim]);
    let lhs = f.compose(&src.right_action).unwrap();
    let rhs = dst.right_action.compose(&f.kron(&a.id())).unwrap();
    r.check_maps("right linear", "f ρ = ρ'(f⊗A)", &lhs, &rhs, &[src.dim, a.dim()]);
    r
}

/// Certifies that `to: x → y` and `from: y → x` are mutually inverse unital
/// algebra homomorphisms.
pub fn check_isomorphism(to: &Mat, from: &Mat, x: &Algebra, y: &Algebra) -> Report {
    let mut r = Report::new("algebra isomorphism");
    let to_ok = to.shape() == (y.dim(), x.dim());
    let from_ok = from.shape() == (x.dim(), y.dim());
    r.absorb("forward", is_algebra_hom(to, x, y));
    r.absorb("backward", is_algebra_hom(from, y, x));
    if to_ok && from_ok {
        r.check_maps(
            "left inverse",
            "g f = id",
            &from.compose(to).unwrap(),
            &x.id(),
            &[x.dim()],
        );
        r.check_maps(
            "right inverse",
            "f g = id",
            &to.compose(from).unwrap(),
            &y.id(),
            &[y.dim()],
        );
    }
    r
}
