mod common;

use std::collections::BTreeSet;

use common::{parse, prealt, prealt_env, read, Dir, CATALOG};
use prealt_cli::format::AlgebraFile;
use prealt_core::altalg::check_alternative;
use prealt_core::bialg::coboundary_delta;
use prealt_core::catalog;
use prealt_core::prealt::check_prealternative;
use prealt_core::ybe::{brute_search, SearchHit, SearchTarget};
use prealt_core::{FieldSpec, Tensor2};
use serde_json::{json, Value};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn gf(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// e1⊗e2 + e2⊗e1.
fn sym12(f: FieldSpec) -> Tensor2 {
    Tensor2::from_fn(f, 2, |i, j| if i != j { f.one() } else { f.zero() })
}

fn identities(report: &Value) -> BTreeSet<String> {
    report["violations"].as_array().unwrap().iter().map(|v| v["identity"].as_str().unwrap().to_string()).collect()
}

#[test]
fn catalog_files_round_trip() {
    for field in ["Q", "3", "5", "7"] {
        for name in CATALOG {
            let run = prealt(&["catalog", name, "--field", field]);
            if run.code != 0 {
                // Only the graded algebra may be unavailable in small characteristic.
                assert_eq!(name, "p3-graded", "{name} over {field}: {}", run.stderr);
                continue;
            }
            let once = parse(&run.stdout);
            assert_eq!(once.to_json(), run.stdout, "{name} over {field}");
            assert_eq!(parse(&once.to_json()), once);
        }
    }
}

#[test]
fn catalog_examples() {
    let n2 = prealt(&["catalog", "n2"]).json();
    assert_eq!(n2["dim"], 2);
    assert_eq!(n2["products"]["mult"], json!([[0, 0, 1, "1"]]));

    let p2 = prealt(&["catalog", "p2"]).json();
    assert_eq!(p2["products"]["prec"], json!([[0, 0, 1, "1/2"]]));
    assert_eq!(p2["products"]["succ"], json!([[0, 0, 1, "1/2"]]));
    assert!(p2["products"].get("mult").is_none());

    let z = prealt(&["catalog", "zero-3"]).json();
    assert_eq!(z["dim"], 3);
    assert_eq!(z["products"]["prec"], json!([]));
    assert_eq!(z["products"]["succ"], json!([]));

    // ½ = 2 in GF(3), written as a bare integer.
    let p2 = prealt(&["catalog", "p2", "--field", "3"]).json();
    assert_eq!(p2["field"], json!({"Fp": 3}));
    assert_eq!(p2["products"]["prec"], json!([[0, 0, 1, 2]]));

    let o = prealt(&["catalog", "octonion"]).json();
    assert_eq!(o["dim"], 8);
    assert_eq!(o["basis"].as_array().unwrap().len(), 8);

    for bad in [&["catalog", "nope"][..], &["catalog", "p2", "--field", "4"], &["catalog", "p2", "--field", "2"]] {
        assert_eq!(prealt(bad).code, 2, "{bad:?}");
    }
}

#[test]
fn check_examples() {
    let d = Dir::new();
    let oct = d.catalog("octonion", "Q");
    let run = prealt(&["check", &oct, "--suite", "alternative"]);
    assert_eq!(run.code, 0);
    let rep = run.json();
    assert_eq!(rep["verdict"], "pass");
    assert_eq!(rep["command"], json!(["check", oct, "--suite", "alternative"]));
    assert!(rep.get("timing").is_none());

    let run = prealt(&["check", &oct, "--suite", "associative"]);
    assert_eq!(run.code, 1);
    assert!(run.json()["total_violations"].as_u64().unwrap() > 0);

    let p2 = d.catalog("p2", "Q");
    assert_eq!(prealt(&["check", &p2, "--suite", "prealt"]).code, 0);
    // The alternative suite on a pre-alternative file checks its associated algebra.
    assert_eq!(prealt(&["check", &p2, "--suite", "alternative"]).code, 0);

    let h = d.catalog("halved-idempotent", "Q");
    let run = prealt(&["check", &h, "--suite", "prealt"]);
    assert_eq!(run.code, 1);
    let rep = run.json();
    assert_eq!(rep["verdict"], "fail");
    let v = rep["violations"].as_array().unwrap().iter().find(|v| v["identity"] == "pa.r.sym").unwrap();
    assert_eq!(v["witness"], json!([0, 0, 0]));
    // (e,e,e)_r + (e,e,e)_r with (e,e,e)_r = -1/4 e.
    assert_eq!(v["residual"], json!(["-1/2"]));

    let run = prealt(&["--timing", "check", &oct, "--suite", "alternative"]);
    assert!(run.json()["timing"].as_f64().unwrap() >= 0.0);
}

#[test]
fn check_suites_on_constructed_files() {
    let d = Dir::new();
    let p2 = catalog::p2(q());
    let r = sym12(q());
    let with_r = d.file("p2r.json", &AlgebraFile::from_prealt(&p2).with_r(&r));

    let pad = d.path("pad.json");
    let run = prealt(&["construct", &with_r, "--op", "pad-double", "--out", pad.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.is_empty());
    let pad = pad.display().to_string();
    assert_eq!(read(pad.as_ref()).dim, 4);
    for suite in ["bialgebra", "coalgebra", "prealt"] {
        assert_eq!(prealt(&["check", &pad, "--suite", suite]).code, 0, "{suite}");
    }
    assert_eq!(prealt(&["check", &pad, "--suite", "coalgebra", "--kind", "prealt"]).code, 0);

    // P2 with its own products read as comultiplications is not even a
    // coalgebra; the gate's report is returned.
    let src = AlgebraFile::from_prealt(&p2);
    let bad = AlgebraFile { alpha: src.products.prec.clone(), beta: src.products.succ.clone(), ..src };
    let bad = d.file("bad.json", &bad);
    let run = prealt(&["check", &bad, "--suite", "bialgebra"]);
    assert_eq!(run.code, 1);
    assert!(identities(&run.json()).iter().all(|i| i.starts_with("coalg.")));

    let cm = d.path("cm.json");
    prealt(&[
        "construct",
        &d.catalog("p2", "Q"),
        "--op",
        "canonical-r",
        "--sign",
        "minus",
        "--out",
        cm.to_str().unwrap(),
    ]);
    let cm = cm.display().to_string();
    assert_eq!(prealt(&["check", &cm, "--suite", "form", "--kind", "symplectic"]).code, 0);
    assert_eq!(prealt(&["check", &cm, "--suite", "form"]).code, 0);
    assert_eq!(prealt(&["check", &cm, "--suite", "form", "--kind", "closed"]).code, 0);
    assert_eq!(prealt(&["check", &cm, "--suite", "form", "--kind", "alt"]).code, 2);

    let cp = d.path("cp.json");
    prealt(&["construct", &d.catalog("p2", "Q"), "--op", "canonical-r", "--sign", "+", "--out", cp.to_str().unwrap()]);
    let cp = cp.display().to_string();
    assert_eq!(prealt(&["check", &cp, "--suite", "cocycle2"]).code, 0);
    assert_eq!(prealt(&["check", &cp, "--suite", "prealt"]).code, 0);

    // Regular bimodules are bimodules.
    let n2 = catalog::n2(q());
    let reg = d.file("reg.json", &AlgebraFile::from_alt(&n2).with_alt_action(&n2.regular_action()));
    assert_eq!(prealt(&["check", &reg, "--suite", "bimodule"]).code, 0);
    let preg = d.file("preg.json", &AlgebraFile::from_prealt(&p2).with_prealt_action(&p2.regular_action()));
    assert_eq!(prealt(&["check", &preg, "--suite", "bimodule"]).code, 0);

    // A bimodule check on a non-alternative algebra reports the algebra failure.
    let h = catalog::halved_idempotent(q());
    let hreg = d.file("hreg.json", &AlgebraFile::from_prealt(&h).with_prealt_action(&h.regular_action()));
    let run = prealt(&["check", &hreg, "--suite", "bimodule"]);
    assert_eq!(run.code, 1);
    assert!(identities(&run.json()).contains("pa.r.sym"));

    // Alternative D-bialgebras: the zero comultiplication and a coboundary one.
    let a = catalog::n2(q());
    let zero = d.file("dz.json", &AlgebraFile::from_alt(&a).with_delta(&prealt_core::Tensor3::zeros(q(), 2)));
    assert_eq!(prealt(&["check", &zero, "--suite", "dbialgebra"]).code, 0);
    assert_eq!(prealt(&["check", &zero, "--suite", "coalgebra"]).code, 0);
    assert_eq!(prealt(&["check", &zero, "--suite", "coalgebra", "--kind", "alt"]).code, 0);
}

#[test]
fn exit_codes() {
    let d = Dir::new();
    let p2 = d.catalog("p2", "Q");
    let base: Value = serde_json::from_str(&std::fs::read_to_string(&p2).unwrap()).unwrap();
    let variant = |name: &str, edit: &dyn Fn(&mut Value)| {
        let mut v = base.clone();
        edit(&mut v);
        d.write(name, &v.to_string())
    };
    let cases = [
        d.write("garbage.json", "{ not json"),
        variant("version.json", &|v| v["format_version"] = json!("2")),
        variant("unknown.json", &|v| v["extra"] = json!(1)),
        variant("range.json", &|v| v["products"]["prec"] = json!([[0, 0, 2, "1"]])),
        variant("scalar.json", &|v| v["products"]["prec"] = json!([[0, 0, 1, "x"]])),
        variant("basis.json", &|v| v["basis"] = json!(["e1"])),
        variant("mixed.json", &|v| v["products"]["mult"] = json!([])),
        variant("half.json", &|v| v["alpha"] = json!([])),
        variant("fp.json", &|v| {
            v["field"] = json!({"Fp": 3});
            v["products"]["prec"] = json!([[0, 0, 1, 3]]);
            v["products"]["succ"] = json!([]);
        }),
        variant("field.json", &|v| v["field"] = json!({"Fp": 9})),
    ];
    for path in &cases {
        let run = prealt(&["check", path, "--suite", "prealt"]);
        assert_eq!(run.code, 2, "{path}: {}", run.stdout);
        assert!(run.stdout.is_empty());
        assert!(run.stderr.starts_with("error:"));
    }
    assert_eq!(prealt(&["check", "/nonexistent/file.json", "--suite", "prealt"]).code, 2);
    assert_eq!(prealt(&["check", &p2, "--suite", "nope"]).code, 2);
    assert_eq!(prealt(&["residual", &p2, "--eq", "pa"]).code, 2);
    assert_eq!(prealt(&["check", &p2, "--suite", "form"]).code, 2);
    assert_eq!(prealt(&["check", &p2, "--suite", "bialgebra"]).code, 2);
    assert_eq!(prealt(&["construct", &p2, "--op", "graded-split"]).code, 2);
    assert_eq!(prealt(&["--workers", "0", "check", &p2, "--suite", "prealt"]).code, 2);

    // Prime-field and rational files agree on the exit contract.
    let p2mod3 = d.catalog("p2", "3");
    assert_eq!(prealt(&["check", &p2mod3, "--suite", "prealt"]).code, 0);
    let h3 = d.catalog("halved-idempotent", "3");
    assert_eq!(prealt(&["check", &h3, "--suite", "prealt"]).code, 1);
}

#[test]
fn witness_limit_from_environment() {
    let d = Dir::new();
    let oct = d.catalog("octonion", "Q");
    let args = ["check", oct.as_str(), "--suite", "associative"];
    let full = prealt(&args).json();
    let total = full["total_violations"].as_u64().unwrap();
    assert!(total > 10);
    assert_eq!(full["violations"].as_array().unwrap().len(), 10);
    assert_eq!(full["truncated"], true);

    let one = prealt_env(&args, &[("PREALT_MAX_WITNESSES", "1")]).json();
    assert_eq!(one["violations"].as_array().unwrap().len(), 1);
    assert_eq!(one["total_violations"].as_u64().unwrap(), total);
    assert_eq!(one["violations"][0], full["violations"][0]);

    let all = prealt_env(&args, &[("PREALT_MAX_WITNESSES", "100000")]).json();
    assert_eq!(all["violations"].as_array().unwrap().len() as u64, total);
    assert_eq!(all["truncated"], false);

    let run = prealt_env(&args, &[("PREALT_MAX_WITNESSES", "ten")]);
    assert_eq!(run.code, 2);
}

#[test]
fn construct_examples() {
    let d = Dir::new();
    let p2 = d.catalog("p2", "Q");
    let run = prealt(&["construct", &p2, "--op", "associated"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, prealt(&["catalog", "n2"]).stdout);

    let run = prealt(&["construct", &p2, "--op", "canonical-r", "--sign", "minus"]);
    let f = parse(&run.stdout);
    assert_eq!(f.dim, 4);
    assert!(f.r.is_some() && f.form.is_some() && f.products.mult.is_some());
    assert_eq!(f.basis, ["e1", "e2", "e1^*", "e2^*"]);
    let run = prealt(&["construct", &p2, "--op", "canonical-r", "--sign", "plus"]);
    let f = parse(&run.stdout);
    assert!(f.r.is_some() && f.form.is_some() && f.products.prec.is_some());

    // graded-split of the 3-dim graded nilpotent algebra reproduces the catalog entry.
    let n3 = d.file("n3.json", &AlgebraFile::from_alt(&catalog::n3(q())));
    let run = prealt(&["construct", &n3, "--op", "graded-split", "--degrees", "1,2,3"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, prealt(&["catalog", "p3-graded"]).stdout);
    assert_eq!(prealt(&["construct", &n3, "--op", "graded-split", "--degrees", "1,2"]).code, 2);

    // symplectic-split of the canonical ambient.
    let cm = d.write("cm.json", &prealt(&["construct", &p2, "--op", "canonical-r"]).stdout);
    let run = prealt(&["construct", &cm, "--op", "symplectic-split"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let s = parse(&run.stdout).structure().unwrap();
    assert!(check_prealternative(s.prealternative().unwrap()).passed());

    // Semidirect sums and dual bimodules, alternative and pre-alternative.
    let n2 = catalog::n2(q());
    let reg = d.file("reg.json", &AlgebraFile::from_alt(&n2).with_alt_action(&n2.regular_action()));
    let sd = parse(&prealt(&["construct", &reg, "--op", "semidirect"]).stdout);
    assert_eq!(sd.dim, 4);
    assert!(check_alternative(&sd.structure().unwrap().alternative()).passed());
    let dual = d.write("dual.json", &prealt(&["construct", &reg, "--op", "dual-bimodule"]).stdout);
    assert_eq!(read(dual.as_ref()).basis, ["e1", "e2"]);
    assert_eq!(prealt(&["check", &dual, "--suite", "bimodule"]).code, 0);
    let p = catalog::p2(q());
    let preg = d.file("preg.json", &AlgebraFile::from_prealt(&p).with_prealt_action(&p.regular_action()));
    let sd = parse(&prealt(&["construct", &preg, "--op", "semidirect"]).stdout);
    assert!(check_prealternative(sd.structure().unwrap().prealternative().unwrap()).passed());
    let pdual = d.write("pdual.json", &prealt(&["construct", &preg, "--op", "dual-bimodule"]).stdout);
    assert_eq!(prealt(&["check", &pdual, "--suite", "bimodule"]).code, 0);

    // Rota-Baxter operators on n2: every search hit induces a pre-alternative algebra.
    let hits = prealt(&["search", "--field", "3", "--dim", "2", "--target", "al-operator", "--algebra", "n2"]).json();
    let n23 = catalog::n2(gf(3));
    let mut count = 0;
    for hit in hits["hits"].as_array().unwrap() {
        let mut f = AlgebraFile::from_alt(&n23);
        f.map = Some(serde_json::from_value(hit["map"].clone()).unwrap());
        let path = d.file("rb.json", &f);
        let run = prealt(&["construct", &path, "--op", "al-induce", "--regular"]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        // The compatible structure needs an invertible operator.
        let e = |i: usize, j: usize| {
            f.map.as_ref().unwrap().entries.iter().find(|x| x.0 == i && x.1 == j).map_or(0, |x| match x.2 {
                prealt_cli::format::ScalarJson::Int(c) => c,
                _ => unreachable!(),
            })
        };
        let invertible = (e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)).rem_euclid(3) != 0;
        let run = prealt(&["construct", &path, "--op", "compatible-from-al", "--regular"]);
        assert_eq!(run.code, if invertible { 0 } else { 1 }, "{}", run.stderr);
        count += 1;
        // Without --regular the actions section is required.
        assert_eq!(prealt(&["construct", &path, "--op", "al-induce"]).code, 2);
    }
    assert_eq!(count, hits["count"].as_u64().unwrap());
    // The identity map is not an operator of n2.
    let id = AlgebraFile::from_alt(&n2).with_map(&prealt_core::Matrix::identity(q(), 2));
    let id = d.file("id.json", &id);
    assert_ne!(prealt(&["construct", &id, "--op", "al-induce", "--regular"]).code, 0);

    // Doubles of alternative D-bialgebras.
    let z = d.file("z.json", &AlgebraFile::from_alt(&n2).with_delta(&prealt_core::Tensor3::zeros(q(), 2)));
    let run = prealt(&["construct", &z, "--op", "double"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let dbl = d.write("dbl.json", &run.stdout);
    assert_eq!(read(dbl.as_ref()).dim, 4);
    assert_eq!(prealt(&["check", &dbl, "--suite", "dbialgebra"]).code, 0);

    let mut doubled = 0;
    for a in [catalog::n2(gf(3)), catalog::halved_field_negative(gf(3))] {
        for hit in brute_search(&SearchTarget::AybeSkew(&a), 1000).unwrap() {
            let SearchHit::Solution(rec) = hit else { unreachable!() };
            let delta = coboundary_delta(&a, rec.r()).unwrap();
            let path = d.file("ab.json", &AlgebraFile::from_alt(&a).with_delta(&delta));
            assert_eq!(prealt(&["check", &path, "--suite", "dbialgebra"]).code, 0);
            let run = prealt(&["construct", &path, "--op", "double"]);
            assert_eq!(run.code, 0, "{}", run.stderr);
            let out = parse(&run.stdout);
            assert_eq!(out.dim, 2 * a.dim());
            doubled += 1;
        }
    }
    assert!(doubled > 0);

    // PAD doubles and dual bialgebras from r or from explicit comultiplications.
    let pr = d.file("pr.json", &AlgebraFile::from_prealt(&p).with_r(&sym12(q())));
    let pad = prealt(&["construct", &pr, "--op", "pad-double"]);
    assert_eq!(pad.code, 0, "{}", pad.stderr);
    let padf = parse(&pad.stdout);
    assert_eq!(padf.basis, ["e1", "e2", "e1^*", "e2^*"]);
    let zc = prealt_core::bialg::ComultiplicationPair::zero(q(), 2);
    let pz = d.file("pz.json", &AlgebraFile::from_prealt(&p).with_comult(&zc));
    let padz = d.write("padz.json", &prealt(&["construct", &pz, "--op", "pad-double"]).stdout);
    assert_eq!(prealt(&["check", &padz, "--suite", "bialgebra"]).code, 0);
    let dual = prealt(&["construct", &pr, "--op", "dual-bialgebra"]);
    assert_eq!(dual.code, 0, "{}", dual.stderr);
    let dualf = d.write("dualb.json", &dual.stdout);
    assert_eq!(read(dualf.as_ref()).basis, ["e1^*", "e2^*"]);
    assert_eq!(prealt(&["check", &dualf, "--suite", "bialgebra"]).code, 0);
    let twice = prealt(&["construct", &dualf, "--op", "dual-bialgebra"]);
    assert_eq!(twice.code, 0);
    let expected = prealt_core::bialg::coboundary_comult(&p, &sym12(q())).unwrap();
    assert_eq!(parse(&twice.stdout).comult().unwrap(), Some(expected));
    assert_eq!(prealt(&["construct", &d.catalog("p2", "Q"), "--op", "pad-double"]).code, 2);
}

#[test]
fn residual_examples() {
    let d = Dir::new();
    let p2 = catalog::p2(q());
    let pr = d.file("pr.json", &AlgebraFile::from_prealt(&p2).with_r(&sym12(q())));
    let run = prealt(&["residual", &pr, "--eq", "pa"]);
    assert_eq!(run.code, 0);
    let doc = run.json();
    assert_eq!(doc["verdict"], "zero");
    let rs = doc["residuals"].as_array().unwrap();
    let ids: Vec<_> = rs.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["PA_1^1", "PA_1^2", "PA_2^1", "PA_2^2", "PA_3^1", "PA_3^2"]);
    assert!(rs.iter().all(|r| r["zero"] == true && r["entries"] == json!([])));

    // In n2 with r = e1⊗e1 only r13 r12 survives: e1·e1 ⊗ e1 ⊗ e1 = e2⊗e1⊗e1.
    let n2 = catalog::n2(q());
    let r11 = Tensor2::from_fn(q(), 2, |i, j| if i == 0 && j == 0 { q().one() } else { q().zero() });
    let nr = d.file("nr.json", &AlgebraFile::from_alt(&n2).with_r(&r11));
    let run = prealt(&["residual", &nr, "--eq", "aybe"]);
    assert_eq!(run.code, 1);
    let doc = run.json();
    assert_eq!(doc["verdict"], "nonzero");
    let entries = doc["residuals"][0]["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e[3] != "0"));
    assert!(entries.iter().all(|e| e.as_array().unwrap().len() == 4));

    for (name, f) in [
        ("p2", AlgebraFile::from_prealt(&p2)),
        ("n2", AlgebraFile::from_alt(&n2)),
        ("oct", AlgebraFile::from_alt(&catalog::octonions(q()))),
    ] {
        let n = f.dim;
        let path = d.file(&format!("{name}0.json"), &f.with_r(&Tensor2::zeros(q(), n)));
        for eq in ["aybe", "aybe-a2", "pa", "coboundary-cond"] {
            if eq == "pa" && name != "p2" {
                continue;
            }
            let run = prealt(&["residual", &path, "--eq", eq]);
            assert_eq!(run.code, 0, "{name} {eq}: {}", run.stderr);
            assert_eq!(run.json()["verdict"], "zero");
        }
    }

    // Coboundary condition: one block per basis vector.
    let run = prealt(&["residual", &pr, "--eq", "coboundary-cond"]);
    assert_eq!(run.code, 0);
    let rs = run.json()["residuals"].as_array().unwrap().clone();
    assert_eq!(rs.len(), 8);
    assert_eq!(rs[0]["id"], "cc.1");
    assert_eq!(rs[7]["witness"], json!([1]));
    // A non-skew r on an alternative file is rejected.
    assert_eq!(prealt(&["residual", &nr, "--eq", "coboundary-cond"]).code, 1);
    // pa needs a pre-alternative file.
    assert_eq!(prealt(&["residual", &nr, "--eq", "pa"]).code, 2);
}

/// Weight-zero Rota-Baxter operators of n2 over GF(3), by direct expansion
/// with e1·e1 = e2: T(x)T(y) = T(T(x)y + xT(y)) on basis pairs.
fn rota_baxter_n2_mod3() -> BTreeSet<Vec<(usize, usize, i64)>> {
    let mul = |x: [i64; 2], y: [i64; 2]| [0, x[0] * y[0] % 3];
    let mut out = BTreeSet::new();
    for code in 0..81 {
        let t = [[code % 3, code / 3 % 3], [code / 9 % 3, code / 27 % 3]];
        let ap = |v: [i64; 2]| [(t[0][0] * v[0] + t[0][1] * v[1]) % 3, (t[1][0] * v[0] + t[1][1] * v[1]) % 3];
        let unit = |i: usize| if i == 0 { [1, 0] } else { [0, 1] };
        let ok = (0..2).all(|i| {
            (0..2).all(|j| {
                let (x, y) = (unit(i), unit(j));
                let lhs = mul(ap(x), ap(y));
                let a = mul(ap(x), y);
                let b = mul(x, ap(y));
                let rhs = ap([(a[0] + b[0]) % 3, (a[1] + b[1]) % 3]);
                lhs == rhs
            })
        });
        if ok {
            let mut entries = Vec::new();
            for (i, row) in t.iter().enumerate() {
                for (j, &c) in row.iter().enumerate() {
                    if c != 0 {
                        entries.push((i, j, c));
                    }
                }
            }
            out.insert(entries);
        }
    }
    out
}

#[test]
fn search_examples() {
    let args = ["search", "--field", "3", "--dim", "2", "--target", "al-operator", "--algebra", "n2"];
    let run = prealt(&args);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(prealt(&args).stdout, run.stdout);
    let doc = run.json();
    let hits: BTreeSet<Vec<(usize, usize, i64)>> = doc["hits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| {
            assert_eq!(h["map"]["rows"], 2);
            h["map"]["entries"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize, e[2].as_i64().unwrap()))
                .collect()
        })
        .collect();
    assert_eq!(hits.len() as u64, doc["count"].as_u64().unwrap());
    assert_eq!(hits, rota_baxter_n2_mod3());

    let doc = prealt(&["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", "p2mod3"]).json();
    assert_eq!(doc["algebra"], "p2mod3");
    let sym = json!({"r": [[0, 1, 1], [1, 0, 1]]});
    assert!(doc["hits"].as_array().unwrap().contains(&sym));

    // Zero algebra: every candidate is a hit.
    for (target, size) in [("aybe-skew", 3u64), ("pa-sym", 27), ("al-operator", 81)] {
        let doc = prealt(&["search", "--field", "3", "--dim", "2", "--target", target]).json();
        assert_eq!(doc["count"].as_u64().unwrap(), size, "{target}");
        assert_eq!(doc["algebra"], "zero-2");
    }
    let doc = prealt(&["search", "--field", "5", "--dim", "1", "--target", "al-operator"]).json();
    assert_eq!(doc["count"], 5);

    let run = prealt(&["search", "--field", "3", "--dim", "3", "--target", "al-operator", "--cap", "1000"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("19683"), "{}", run.stderr);
    assert_eq!(prealt(&["search", "--field", "4", "--dim", "2", "--target", "pa-sym"]).code, 2);
    assert_eq!(prealt(&["search", "--field", "3", "--dim", "3", "--target", "pa-sym", "--algebra", "n2"]).code, 2);
    assert_eq!(prealt(&["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", "p2mod5"]).code, 2);
    assert_eq!(prealt(&["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", "n2"]).code, 2);

    // A file works as the algebra too.
    let d = Dir::new();
    let p = d.catalog("p2", "3");
    let from_file = prealt(&["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", &p]).json();
    let by_name = prealt(&["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", "p2"]).json();
    assert_eq!(from_file["hits"], by_name["hits"]);
}

#[test]
fn output_is_identical_across_runs_and_worker_counts() {
    let d = Dir::new();
    let oct = d.catalog("octonion", "Q");
    let h = d.catalog("halved-idempotent", "Q");
    let p2 = catalog::p2(q());
    let pr = d.file("pr.json", &AlgebraFile::from_prealt(&p2).with_r(&sym12(q())));
    let pad = d.write("pad.json", &prealt(&["construct", &pr, "--op", "pad-double"]).stdout);
    let commands: Vec<Vec<&str>> = vec![
        vec!["check", &oct, "--suite", "alternative"],
        vec!["check", &oct, "--suite", "associative"],
        vec!["check", &h, "--suite", "prealt"],
        vec!["check", &pad, "--suite", "bialgebra"],
        vec!["construct", &pr, "--op", "canonical-r"],
        vec!["residual", &pr, "--eq", "coboundary-cond"],
        vec!["search", "--field", "3", "--dim", "2", "--target", "pa-sym", "--algebra", "p2mod3"],
    ];
    for cmd in commands {
        let base = prealt(&cmd);
        assert_eq!(prealt(&cmd).stdout, base.stdout, "{cmd:?}");
        for w in ["1", "4"] {
            let mut with = vec!["--workers", w];
            with.extend(&cmd);
            let run = prealt(&with);
            assert_eq!(run.code, base.code);
            assert_eq!(run.stdout, base.stdout, "{cmd:?} with {w} workers");
        }
    }
}
