//! The three-dimensional algebra `T` of upper triangular 2×2 matrices,
//! presented on `1, a, b` with `a² = b² = 1`, `ab = a+b−1`, `ba = −(a+b+1)`,
//! as a weak wreath product of two copies of `kℤ₂`.

use crate::algebra::Algebra;
use crate::error::Result;
use crate::factorization::{iso_to_wreath, roundtrip_object, validate_fact, wdl_of_fact, BilinFact};
use crate::linalg::{int, rat, Mat, Scalar};
use crate::report::Report;
use crate::wdl::{check_wdl, check_wdl_alt, psibar_identities, Wdl};

pub fn triangle_algebra() -> Algebra {
    let one = int(1);
    let m = int(-1);
    // (i, j, k, c): e_i e_j has coefficient c on e_k; basis 1 = 0, a = 1, b = 2.
    let mut table: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for x in 0..3 {
        table.push((0, x, x, one.clone()));
        if x != 0 {
            table.push((x, 0, x, one.clone()));
        }
    }
    table.push((1, 1, 0, one.clone()));
    table.push((2, 2, 0, one.clone()));
    table.extend([(1, 2, 0, m.clone()), (1, 2, 1, one.clone()), (1, 2, 2, one.clone())]);
    table.extend([(2, 1, 0, m.clone()), (2, 1, 1, m.clone()), (2, 1, 2, m)]);
    Algebra::from_table(&["1", "a", "b"], vec![int(1), int(0), int(0)], &table).expect("table is well formed")
}

fn quarters(cols: &[[i64; 4]]) -> Mat {
    let cols: Vec<Vec<Scalar>> = cols.iter().map(|c| c.iter().map(|&x| rat(x, 4)).collect()).collect();
    Mat::from_cols(4, &cols)
}

/// `g ↦ a`.
pub fn triangle_alpha() -> Mat {
    Mat::from_ints(&[&[1, 0], &[0, 1], &[0, 0]])
}

/// `g ↦ b`.
pub fn triangle_beta() -> Mat {
    Mat::from_ints(&[&[1, 0], &[0, 0], &[0, 1]])
}

/// Columns `ι(1), ι(a), ι(b)` in the basis `1⊗1, 1⊗g, g⊗1, g⊗g`.
pub fn triangle_iota() -> Mat {
    quarters(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1]])
}

/// Columns `Ψ(1⊗1), Ψ(1⊗g), Ψ(g⊗1), Ψ(g⊗g)`.
pub fn triangle_psi() -> Mat {
    quarters(&[[3, -1, -1, -1], [-1, -1, 3, -1], [-1, 3, -1, -1], [-5, 3, 3, -1]])
}

/// Columns `π(1⊗1) = 1`, `π(1⊗g) = a`, `π(g⊗1) = b`, `π(g⊗g) = −(a+b+1)`.
pub fn triangle_pi() -> Mat {
    Mat::from_ints(&[&[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]])
}

#[derive(Clone, Debug)]
pub struct Triangle {
    pub fact: BilinFact,
    pub wdl: Wdl,
    pub report: Report,
}

pub fn triangle_fact() -> BilinFact {
    let z2 = Algebra::group_z2();
    BilinFact::new(
        z2.clone(),
        z2,
        triangle_algebra(),
        triangle_alpha(),
        triangle_beta(),
        triangle_iota(),
    )
    .expect("shapes agree")
}

/// The fixture with every tabulated value checked against computation.
pub fn triangle_fixture() -> Result<Triangle> {
    let fact = triangle_fact();
    let mut report = Report::new("triangle fixture");
    report.absorb("T", fact.r.validate());
    report.absorb("factorization", validate_fact(&fact));
    report.check_maps(
        "pi table",
        "π = μ_T(β⊗α)",
        &crate::factorization::pi_of(&fact),
        &triangle_pi(),
        &[2, 2],
    );
    let derived = wdl_of_fact(&fact)?;
    report.check_maps("psi table", "Ψ = ι μ_T(α⊗β)", &derived.psi, &triangle_psi(), &[2, 2]);
    let wdl = Wdl::new(fact.a.clone(), fact.b.clone(), triangle_psi())?;
    report.absorb("law", check_wdl(&wdl.a, &wdl.b, &wdl.psi));
    report.absorb("law (split unit)", check_wdl_alt(&wdl.a, &wdl.b, &wdl.psi));
    report.absorb("psibar", psibar_identities(&wdl));
    report.absorb("object roundtrip", roundtrip_object(&wdl)?);
    let iso = iso_to_wreath(&fact)?;
    report.check_condition(
        "wreath dimension",
        "dim kℤ₂ ⊗_Ψ kℤ₂ = 3",
        iso.wreath.product.dim() == 3,
        vec![iso.wreath.product.dim()],
    );
    report.absorb("wreath iso", iso.report);
    let report = report.into_result("triangle fixture")?;
    Ok(Triangle { fact, wdl, report })
}
