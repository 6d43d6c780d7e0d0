//! One PASS/FAIL line per acceptance criterion, all exact.

use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use wreathlab::algebra::{check_isomorphism, is_algebra_hom, tensor_algebra, BimoduleStructure};
use wreathlab::cells::{check_2cell, check_wdl_onecell, rho_from, F_on_cells, MonadMorphCell, WdlOneCell};
use wreathlab::factorization::{fact_of_wdl, iso_to_wreath, roundtrip_fact, validate_fact, wdl_of_fact};
use wreathlab::gallery::bialgebra::{bialgebra_strictness, ModuleAlgebra, WeakBialgebra};
use wreathlab::gallery::frobenius::{tensor_over_r, Module};
use wreathlab::gallery::refinement::subalgebra_diagrams;
use wreathlab::gallery::triangle::triangle_algebra;
use wreathlab::gallery::{
    direct_sum_wdl, e_extension, sf_weak_dl, smash_wdl, subalgebra_refinement, triangle_fixture, validate_frobenius,
    validate_weak_bialgebra, FrobeniusStructure, SfLaw,
};
use wreathlab::io::{mat_from_json, Bundle};
use wreathlab::linalg::{encode_index, int, rat, split_idempotent};
use wreathlab::ore::{
    ore_check_properties, ore_psi, ore_strictness, ore_tilde_basis, ore_wreath_mult, validate_pqqd, OrePoly,
    PQQuasiDerivation,
};
use wreathlab::wdl::{check_wdl, kappa_left, kappa_right, psibar, psibar_identities, psibar_via_mult, weak_wreath};
use wreathlab::{Algebra, BilinFact, Check, Mat, Report, Scalar, Wdl, Witness};

type Outcome = Result<(), String>;
type Case = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: wreathlab::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn passes(r: &Report, what: &str) -> Outcome {
    ensure!(
        r.passed(),
        "{what}: {}",
        r.failures().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

fn q(cols: &[[i64; 4]]) -> Mat {
    let cols: Vec<Vec<Scalar>> = cols.iter().map(|c| c.iter().map(|&x| rat(x, 4)).collect()).collect();
    Mat::from_cols(4, &cols)
}

fn wreathlab_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_wreathlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn mat_at(v: &Value, ptr: &str) -> Result<Mat, String> {
    let m = v.pointer(ptr).ok_or(format!("missing {ptr}"))?;
    mat_from_json(m, ptr).map_err(|e| e.to_string())
}

fn timed(limit: Duration, what: &str, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn fixtures() -> Result<Vec<(&'static str, Wdl)>, String> {
    let (k, z2, kk) = (Algebra::ground(), Algebra::group_z2(), Algebra::diagonal(2));
    let dirsum = lib(direct_sum_wdl(&[Wdl::flip(&z2, &kk), Wdl::flip(&k, &z2)]))?;
    let smash = lib(smash_wdl(
        &WeakBialgebra::discrete_groupoid(2),
        &ModuleAlgebra::discrete_objects(2),
    ))?;
    Ok(vec![
        ("triangle", lib(triangle_fixture())?.wdl),
        ("swap", Wdl::flip(&z2, &kk)),
        ("e-extension", lib(e_extension(&kk, &[int(1), int(0)], &z2, None))?.wdl),
        ("dirsum", dirsum.wdl.clone()),
        ("smash", smash.wdl),
        ("sF", dirsum.sf.wdl),
    ])
}

/// The identity `R`-law on `A = B = R = k×k`.
fn kk_frobenius() -> Result<SfLaw, String> {
    let s = FrobeniusStructure::diagonal(2);
    let r = s.r.clone();
    let id = r.id();
    let ab = lib(tensor_over_r(
        &Module::right_via(&r, &id),
        &Module::left_via(&r, &id),
        &s,
    ))?;
    lib(sf_weak_dl(&r, &r, &id, &id, &Mat::identity(ab.dim), &s))
}

fn the_failure(r: &Report, name: &str) -> Result<Witness, String> {
    let c: &Check = r.get(name).ok_or(format!("no check named {name}"))?;
    ensure!(!c.passed, "{name} unexpectedly passed");
    c.witness.clone().ok_or(format!("{name} has no witness"))
}

/// Re-evaluates `lhs` and `rhs` at the input named by the witness.
fn replay(w: &Witness, lhs: &Mat, rhs: &Mat, domain: &[usize]) -> Outcome {
    let col = encode_index(&w.indices, domain);
    ensure!(lhs.col(col) == w.lhs, "lhs at {:?} does not replay", w.indices);
    ensure!(rhs.col(col) == w.rhs, "rhs at {:?} does not replay", w.indices);
    ensure!(w.lhs != w.rhs, "witness at {:?} shows no inequality", w.indices);
    Ok(())
}

fn criterion_1() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("triangle.json");
    timed(Duration::from_secs(1), "example triangle", || {
        let run = wreathlab_bin(&["example", "triangle", "--quiet", "--out", out.to_str().unwrap()]);
        ensure!(run.status.code() == Some(0), "exit {:?}", run.status.code());
        Ok(())
    })?;
    let v = read_json(&out);
    ensure!(v["report"]["passed"] == json!(true), "bundle report fails");
    let pi = Mat::from_ints(&[&[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]]);
    ensure!(mat_at(&v, "/pi")? == pi, "π table differs");
    let iota = q(&[[3, -1, -1, -1], [-1, 3, -1, -1], [-1, -1, 3, -1]]);
    ensure!(mat_at(&v, "/fact/iota")? == iota, "ι rows differ");
    let psi = q(&[[3, -1, -1, -1], [-1, -1, 3, -1], [-1, 3, -1, -1], [-5, 3, 3, -1]]);
    ensure!(mat_at(&v, "/law/psi")? == psi, "Ψ rows differ");
    ensure!(
        psi.col(3) == vec![rat(-5, 4), rat(3, 4), rat(3, 4), rat(-1, 4)],
        "Ψ(g⊗g)"
    );

    let t = triangle_algebra();
    let product = Algebra::from_json_at(&v["wreath"]["product"], "/wreath/product").map_err(|e| e.to_string())?;
    ensure!(product.dim() == 3, "weak wreath has dimension {}", product.dim());
    let to = lib(mat_at(&v, "/wreath/proj")?.compose(&iota))?;
    let from = lib(pi.compose(&mat_at(&v, "/wreath/incl")?))?;
    passes(&check_isomorphism(&to, &from, &t, &product), "proj ι and π incl")?;
    passes(&is_algebra_hom(&to, &t, &product), "proj ι")?;
    passes(&is_algebra_hom(&from, &product, &t), "π incl")
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(5), "identity suite", || {
        for (name, w) in fixtures()? {
            passes(&check_wdl(&w.a, &w.b, &w.psi), name)?;
            let pb = lib(psibar(&w))?;
            ensure!(psibar_via_mult(&w) == pb, "{name}: Ψ̄ via μ");
            ensure!(kappa_left(&w) == pb && kappa_right(&w) == pb, "{name}: κ");
            ensure!(lib(pb.compose(&w.psi))? == w.psi, "{name}: Ψ̄Ψ = Ψ");
            ensure!(lib(pb.compose(&pb))? == pb, "{name}: Ψ̄² = Ψ̄");
            passes(&psibar_identities(&w), name)?;
            let s = lib(split_idempotent(&pb))?;
            ensure!(lib(s.proj.compose(&s.incl))?.is_identity(), "{name}: proj incl");
            ensure!(lib(s.incl.compose(&s.proj))? == pb, "{name}: incl proj");
        }
        Ok(())
    })
}

fn criterion_3() -> Outcome {
    let mut facts: Vec<(String, BilinFact)> = vec![
        ("triangle".into(), lib(triangle_fixture())?.fact),
        ("frobenius".into(), kk_frobenius()?.fact),
    ];
    for (name, w) in fixtures()? {
        let f = lib(fact_of_wdl(&w))?;
        ensure!(lib(wdl_of_fact(&f))? == w, "{name}: Ψ not recovered");
        facts.push((format!("{name} wreath"), f));
    }
    for (name, f) in facts {
        let iso = lib(iso_to_wreath(&f))?;
        passes(&iso.report, &name)?;
        let back = lib(fact_of_wdl(&lib(wdl_of_fact(&f))?))?;
        passes(
            &check_isomorphism(&iso.to_wreath, &iso.from_wreath, &f.r, &back.r),
            &name,
        )?;
        ensure!(lib(iso.to_wreath.compose(&f.alpha))? == back.alpha, "{name}: α");
        ensure!(lib(iso.to_wreath.compose(&f.beta))? == back.beta, "{name}: β");
        passes(&lib(roundtrip_fact(&f))?, &name)?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let (z2, kk, t3) = (Algebra::group_z2(), Algebra::diagonal(2), Algebra::upper_triangular());
    for w in [Wdl::flip(&z2, &kk), Wdl::flip(&kk, &z2), Wdl::flip(&t3, &z2)] {
        ensure!(lib(psibar(&w))?.is_identity(), "Ψ̄ ≠ id");
        let wr = lib(weak_wreath(&w))?;
        let classical = tensor_algebra(&w.b, &w.a);
        ensure!(wr.product.mult() == classical.mult(), "product differs from B⊗A");
        ensure!(wr.product.unit() == classical.unit(), "unit differs from 1⊗1");
        ensure!(lib(subalgebra_refinement(&w))?.strict, "refinement not strict");
        passes(&subalgebra_diagrams(&w), "subalgebra diagrams")?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let (z2, kk) = (Algebra::group_z2(), Algebra::diagonal(2));
    let laws = [Wdl::flip(&z2, &kk), Wdl::flip(&kk, &z2)];
    let d = lib(direct_sum_wdl(&laws))?;
    passes(&d.report, "direct sum")?;
    ensure!(
        d.wreath.product.dim() == 8,
        "wreath dimension {}",
        d.wreath.product.dim()
    );
    let blocks = lib(wreathlab::algebra::direct_sum(&[
        tensor_algebra(&kk, &z2),
        tensor_algebra(&z2, &kk),
    ]))?;
    ensure!(
        blocks.algebra.mult() == d.blocks.algebra.mult(),
        "blocks are not the tensor algebras"
    );
    passes(
        &check_isomorphism(&d.to_wreath, &d.from_wreath, &blocks.algebra, &d.wreath.product),
        "block isomorphism",
    )?;
    ensure!(d.sf.wdl.psi == d.wdl.psi, "sf_weak_dl over k×k differs");
    Ok(())
}

fn criterion_6() -> Outcome {
    let k = Algebra::ground();
    let from_dirsum = lib(direct_sum_wdl(&[Wdl::flip(&k, &k), Wdl::flip(&k, &k)]))?.sf;
    for (name, law) in [("identity R-law", kk_frobenius()?), ("two ground swaps", from_dirsum)] {
        let pb = lib(psibar(&law.wdl))?;
        ensure!(pb == lib(law.ba.incl.compose(&law.ba.proj))?, "{name}: Ψ̄ ≠ incl proj");
        ensure!(pb.rank() == law.ba.dim, "{name}: rank {} vs {}", pb.rank(), law.ba.dim);
        ensure!(law.ba.dim == 2, "{name}: dim B⊗_R A = {}", law.ba.dim);
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let h = WeakBialgebra::discrete_groupoid(2);
    let r = validate_weak_bialgebra(&h);
    passes(&r, "weak bialgebra")?;
    ensure!(
        r.checks.iter().filter(|c| c.name.starts_with("caps/")).count() >= 10,
        "cap identities missing"
    );
    ensure!(
        !bialgebra_strictness(&h).passed(),
        "k×k groupoid is an ordinary bialgebra"
    );
    let s = lib(smash_wdl(&h, &ModuleAlgebra::discrete_objects(2)))?;
    passes(&check_wdl(&s.wdl.a, &s.wdl.b, &s.wdl.psi), "smash law")?;
    ensure!(s.sf.wdl.psi == s.wdl.psi, "smash law differs from sf_weak_dl");
    Ok(())
}

fn upper_triangular_bundle() -> Value {
    json!({
        "B": Algebra::upper_triangular().to_json(),
        "p": ["1", "0", "0"],
        "q": ["0", "1", "0"],
        "sigma": {"rows": 3, "cols": 3, "entries": [[1, 0, 0], [0, 0, 0], [0, 0, 0]]},
        "delta": {"rows": 3, "cols": 3, "entries": [[0, 0, 0], [1, 0, 0], [0, 0, 0]]},
    })
}

fn criterion_8() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pqqd.json");
    std::fs::write(&path, upper_triangular_bundle().to_string()).unwrap();
    timed(Duration::from_secs(10), "Ore suite", || {
        let run = wreathlab_bin(&["ore", "--pqqd", path.to_str().unwrap(), "--check", "6", "--json"]);
        ensure!(run.status.code() == Some(0), "CLI exit {:?}", run.status.code());
        let report: Value = serde_json::from_slice(&run.stdout).map_err(|e| e.to_string())?;
        ensure!(report["passed"] == json!(true), "CLI report fails");

        let d = lib(wreathlab::io::load_bundle::<PQQuasiDerivation>(&path))?;
        passes(&validate_pqqd(&d), "pqqd")?;
        let props = ore_check_properties(&d, 6);
        passes(&props, "bullets")?;
        for name in [
            "absorbs p",
            "kills q",
            "unit coefficients",
            "multiplicative in k[X]",
            "multiplicative in B",
            "degree bound",
        ] {
            ensure!(props.get(name).is_some_and(|c| c.passed), "{name}");
        }
        let one = d.b.one();
        let x = ore_psi(&d, 1, &one);
        let mut power = ore_psi(&d, 0, &one);
        for n in 0..=5 {
            ensure!(power == ore_psi(&d, n, &one), "Ψ(X⊗1)^{n} ≠ Ψ(X^{n}⊗1)");
            power = ore_wreath_mult(&d, &power, &x);
        }
        for n in 0..=6 {
            for i in 0..3 {
                let deg = ore_psi(&d, n, &d.b.basis_elem(i)).degree();
                ensure!(deg.is_none_or(|g| g <= n + 1), "deg Ψ(X^{n}⊗b{i}) = {deg:?}");
            }
        }
        passes(&ore_tilde_basis(&d, 6).report, "characterization")?;
        passes(&ore_strictness(&d, 6), "strictness diagrams")
    })
}

fn negative_unit_axiom() -> Outcome {
    let one = int(1);
    let a = lib(Algebra::from_table(
        &["1", "g"],
        vec![int(1), int(0)],
        &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 1, 0, one)],
    ))?;
    let w = the_failure(&a.validate(), "right unit")?;
    let rhs = a.id();
    let lhs = lib(a.mult().compose(&a.id().kron(a.unit())))?;
    replay(&w, &lhs, &rhs, &[2])
}

fn negative_hom() -> Outcome {
    let (z2, t) = (Algebra::group_z2(), triangle_algebra());
    let f = Mat::from_ints(&[&[1, 0], &[0, 1], &[0, 1]]);
    let w = the_failure(&is_algebra_hom(&f, &z2, &t), "multiplicative")?;
    ensure!(w.indices == vec![1, 1], "witness {:?} is not g⊗g", w.indices);
    replay(
        &w,
        &lib(f.compose(z2.mult()))?,
        &lib(t.mult().compose(&f.kron(&f)))?,
        &[2, 2],
    )
}

fn negative_transposed_iota() -> Outcome {
    let f = lib(triangle_fixture())?.fact;
    let t = wreathlab::gallery::triangle::triangle_iota().transpose();
    let padded = Mat::from_fn(4, 3, |i, j| if i < 3 { t.get(i, j).clone() } else { int(0) });
    let (src, dst) = (f.induced(), BimoduleStructure::outer(&f.b, &f.a));
    let r = wreathlab::algebra::is_bimodule_map(&padded, &src, &dst);
    let w = the_failure(&r, "left linear")?;
    let lhs = lib(padded.compose(&src.left_action))?;
    let rhs = lib(dst.left_action.compose(&f.b.id().kron(&padded)))?;
    replay(&w, &lhs, &rhs, &[2, 3])
}

fn negative_weak_unit() -> Outcome {
    let kk = Algebra::diagonal(2);
    let beta = Mat::from_ints(&[&[1, 0], &[1, 0]]);
    let psi = lib(beta.kron(&kk.id()).compose(&Mat::flip(2, 2)))?;
    let r = check_wdl(&kk, &kk, &psi);
    ensure!(
        r.get("multiplicative in A").is_some_and(|c| c.passed),
        "diagram one fails"
    );
    ensure!(
        r.get("multiplicative in B").is_some_and(|c| c.passed),
        "diagram two fails"
    );
    let w = the_failure(&r, "weak unit")?;
    let (a, b) = (kk.id(), kk.id());
    let lhs = lib(Mat::chain(&[
        &kk.unit().kron(&b).kron(&a),
        &psi.kron(&a),
        &b.kron(kk.mult()),
    ]))?;
    let rhs = lib(Mat::chain(&[
        &b.kron(&a).kron(kk.unit()),
        &b.kron(&psi),
        &kk.mult().kron(&a),
    ]))?;
    replay(&w, &lhs, &rhs, &[2, 2])
}

fn negative_corrupted_psi() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let t = lib(triangle_fixture())?;
    let mut law = t.wdl.clone();
    law.psi.set(0, 0, int(1));
    let path = dir.path().join("broken.json");
    std::fs::write(&path, law.to_json().to_string()).unwrap();
    let run = wreathlab_bin(&["check-wdl", path.to_str().unwrap(), "--json"]);
    ensure!(run.status.code() == Some(1), "exit {:?}", run.status.code());
    let v: Value = serde_json::from_slice(&run.stdout).map_err(|e| e.to_string())?;
    let check = v["checks"]
        .as_array()
        .and_then(|cs| cs.iter().find(|c| c["name"] == json!("multiplicative in A")))
        .ok_or("no multiplicative in A check")?;
    ensure!(check["passed"] == json!(false), "multiplicative in A passed");
    let parse = |key: &str| -> Vec<Scalar> {
        check["witness"][key]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| wreathlab::linalg::parse_scalar(x.as_str().unwrap()).unwrap())
            .collect()
    };
    let indices = check["witness"]["indices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i.as_u64().unwrap() as usize)
        .collect();
    let w = Witness {
        indices,
        lhs: parse("lhs"),
        rhs: parse("rhs"),
    };
    let (a, b) = (&law.a, &law.b);
    let lhs = lib(law.psi.compose(&a.mult().kron(&b.id())))?;
    let rhs = lib(Mat::chain(&[
        &a.id().kron(&law.psi),
        &law.psi.kron(&a.id()),
        &b.id().kron(a.mult()),
    ]))?;
    replay(&w, &lhs, &rhs, &[2, 2, 2])
}

fn negative_section() -> Outcome {
    let mut f = lib(triangle_fixture())?.fact;
    for i in 0..4 {
        f.iota.set(i, 0, int(i64::from(i == 0)));
    }
    let r = validate_fact(&f);
    ensure!(!r.passed(), "ι(1) = 1⊗1 passes");
    let w = the_failure(&r, "iota/left linear")?;
    let (src, dst) = (f.induced(), BimoduleStructure::outer(&f.b, &f.a));
    let lhs = lib(f.iota.compose(&src.left_action))?;
    let rhs = lib(dst.left_action.compose(&f.b.id().kron(&f.iota)))?;
    replay(&w, &lhs, &rhs, &[2, 3])
}

fn negative_frobenius() -> Outcome {
    let z2 = Algebra::group_z2();
    let s = FrobeniusStructure::from_pairs(z2.clone(), Mat::from_ints(&[&[1, 0]]), &[(z2.one(), z2.one())]);
    let w = the_failure(&validate_frobenius(&s), "dual basis (left)")?;
    ensure!(w.lhs != w.rhs, "no inequality");
    Ok(())
}

fn negative_q_square() -> Outcome {
    let mut d = PQQuasiDerivation::upper_triangular_example();
    d.q = vec![int(1), int(0), int(0)];
    let w = the_failure(&validate_pqqd(&d), "q square zero")?;
    ensure!(w.lhs == d.b.mul(&d.q, &d.q), "q² does not replay");
    ensure!(w.rhs == vec![int(0); 3] && w.lhs != w.rhs, "no inequality");
    Ok(())
}

fn negative_delta_q() -> Outcome {
    let mut d = PQQuasiDerivation::upper_triangular_example();
    d.delta.set(0, 1, int(1));
    let w = the_failure(&ore_check_properties(&d, 3), "multiplicative in B")?;
    let [n, i, j] = w.indices[..] else {
        return Err(format!("witness {:?} is not (n, b, b′)", w.indices));
    };
    let (bi, bj) = (d.b.basis_elem(i), d.b.basis_elem(j));
    let first = ore_psi(&d, n, &bi);
    let lhs = first.coeffs().iter().enumerate().fold(OrePoly::zero(3), |acc, (m, c)| {
        acc.add(&ore_psi(&d, m, &bj).left_mul(&d.b, c))
    });
    let rhs = ore_psi(&d, n, &d.b.mul(&bi, &bj));
    let len = w.lhs.len() / 3;
    ensure!(
        lhs.flatten(len) == w.lhs && rhs.flatten(len) == w.rhs,
        "Ψ does not replay at {:?}",
        w.indices
    );
    ensure!(w.lhs != w.rhs, "no inequality");
    Ok(())
}

fn negative_zeta() -> Outcome {
    let t = lib(triangle_fixture())?;
    let mut c = WdlOneCell::identity(&t.wdl);
    c.zeta.xi = Mat::from_ints(&[&[0, 1], &[1, 0]]);
    let r = check_wdl_onecell(&c);
    ensure!(r.failures().all(|f| f.witness.is_some()), "failure without witness");
    let w = the_failure(&r, "zeta/unital")?;
    let lhs = lib(c.zeta.xi.compose(t.wdl.b.unit()))?;
    replay(&w, &lhs, t.wdl.b.unit(), &[1])
}

fn criterion_9() -> Outcome {
    let cases: [Case; 10] = [
        ("unit axiom", negative_unit_axiom),
        ("g ↦ a+b", negative_hom),
        ("transposed ι", negative_transposed_iota),
        ("weak unit", negative_weak_unit),
        ("corrupted Ψ", negative_corrupted_psi),
        ("section", negative_section),
        ("Frobenius functional", negative_frobenius),
        ("q² = 0", negative_q_square),
        ("δ(q) = 0", negative_delta_q),
        ("perturbed ζ", negative_zeta),
    ];
    for (name, case) in cases {
        case().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let t = lib(triangle_fixture())?;
    let id = WdlOneCell::identity(&t.wdl);
    passes(&check_wdl_onecell(&id), "identity 1-cell")?;
    passes(&check_2cell(&Mat::identity(1), &id, &id), "identity 2-cell")?;
    let flip = WdlOneCell {
        src: t.wdl.clone(),
        dst: t.wdl.clone(),
        xi: MonadMorphCell::flip(&t.wdl.a, 2),
        zeta: MonadMorphCell::flip(&t.wdl.b, 2),
    };
    passes(&check_wdl_onecell(&flip), "flip 1-cell")?;
    passes(&check_2cell(&Mat::identity(2), &flip, &flip), "identity 2-cell on flip")?;
    let lifted = lib(rho_from(&flip, &t.fact, &t.fact))?;
    ensure!(lib(F_on_cells(&lifted))? == flip, "F ∘ ρ-lift is not the identity");
    let lifted_id = lib(rho_from(&id, &t.fact, &t.fact))?;
    ensure!(lifted_id.rho.xi.is_identity(), "identity does not lift to the identity");
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Case; 10] = [
        ("triangle reproduction", criterion_1),
        ("core identity suite", criterion_2),
        ("object roundtrips", criterion_3),
        ("strict-case degeneration", criterion_4),
        ("direct sum", criterion_5),
        ("separable Frobenius", criterion_6),
        ("weak bialgebra", criterion_7),
        ("weak Ore extension", criterion_8),
        ("negative paths", criterion_9),
        ("morphism cells", criterion_10),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(()) => writeln!(out, "PASS criterion {n}: {name}").unwrap(),
            Err(e) => {
                writeln!(out, "FAIL criterion {n}: {name}: {e}").unwrap();
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
