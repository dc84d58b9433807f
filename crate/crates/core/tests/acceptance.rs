//! Acceptance battery: twelve exact checks over the default prime field.
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use satbound::combinat::monomial_count;
use satbound::corpus::{build_example, default_corpus, footnote_check, Example, ExampleSpec, Family};
use satbound::ideal_ops::{ideal_power, sat_degree, saturate};
use satbound::resolution::{arith_reg, geom_reg, minimal_resolution};
use satbound::schur::{
    be_euler_char, degree_bound, hook_graded, hook_rank_oracle, weyman_reg_check, DegreeSequence, GradedMultiset,
};
use satbound::{Ideal, PrimeField};

type Outcome = Result<String, String>;

fn example(spec: ExampleSpec) -> Example<PrimeField> {
    build_example(PrimeField::default(), &spec).expect("example builds")
}

fn sd(i: &Ideal<PrimeField>, a: u32) -> Result<i64, String> {
    let p = ideal_power(i, a).map_err(|e| e.to_string())?;
    Ok(sat_degree(&p).map_err(|e| e.to_string())?.sat_degree as i64)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hyperplane() -> Outcome {
    let mut seen = Vec::new();
    for (r, d) in [(2usize, 2u32), (2, 3), (3, 2)] {
        let ex = example(ExampleSpec::new(Family::Hyperplane).r(r).d(d));
        let ds = ex.degree_sequence().map_err(|e| e.to_string())?;
        for a in 1..=3u32 {
            let got = sd(&ex.ideal, a)?;
            let exact = (a as i64 + r as i64) * d as i64 - 2 * r as i64;
            let bound = (a as i64 + r as i64) * d as i64 - r as i64;
            ensure(degree_bound(a, &ds) == bound, || format!("r={r} d={d} a={a}: bound formula {}", degree_bound(a, &ds)))?;
            ensure(got == exact, || format!("r={r} d={d} a={a}: sat.deg {got}, expected {exact}"))?;
            ensure(got <= bound, || format!("r={r} d={d} a={a}: {got} > {bound}"))?;
            seen.push(got.to_string());
        }
    }
    Ok(format!("sat.deg = (a+r)d - 2r on 9 cases: {}", seen.join(" ")))
}

fn three_points() -> Outcome {
    let ex = example(ExampleSpec::new(Family::CoordPoints).r(2));
    let mut vals = Vec::new();
    for a in 2..=4u32 {
        let got = sd(&ex.ideal, a)?;
        ensure(got == 2 * a as i64, || format!("a={a}: sat.deg {got}"))?;
        ensure(got <= 2 * a as i64 + 2, || format!("a={a}: above 2a+2"))?;
        vals.push(got);
    }
    let sq = ideal_power(&ex.ideal, 2).map_err(|e| e.to_string())?;
    let sat = saturate(&sq).map_err(|e| e.to_string())?;
    let gap = sat.graded_dim(3).map_err(|e| e.to_string())? - sq.graded_dim(3).map_err(|e| e.to_string())?;
    ensure(gap == 1, || format!("gap in degree 3 is {gap}"))?;
    let xyz = sq.ring().parse("x0*x1*x2").map_err(|e| e.to_string())?;
    ensure(
        sat.contains(&xyz).unwrap_or(false) && !sq.contains(&xyz).unwrap_or(true),
        || "xyz does not span the gap".into(),
    )?;
    Ok(format!("sat.deg(I^a) for a=2,3,4: {vals:?}; gap in degree 3 = 1 spanned by xyz"))
}

fn macaulay() -> Outcome {
    let ex = example(ExampleSpec::new(Family::GenericRegseq).degrees(&[2, 2, 2]).r(2).seed(0));
    let mut out = Vec::new();
    for a in 1..=2u32 {
        let ja = ideal_power(&ex.ideal, a).map_err(|e| e.to_string())?;
        let t = 2 * a + 2;
        let at = ja.graded_dim(t).map_err(|e| e.to_string())?;
        let below = ja.graded_dim(t - 1).map_err(|e| e.to_string())?;
        let (full_t, full_b) = (monomial_count(3, t as i64), monomial_count(3, t as i64 - 1));
        ensure(at == full_t, || format!("a={a}: dim J_{t} = {at} < {full_t}"))?;
        ensure(below < full_b, || format!("a={a}: J_{} already full", t - 1))?;
        out.push(format!("a={a}: t={t} {at}/{full_t}, t={} {below}/{full_b}", t - 1));
    }
    Ok(out.join("; "))
}

fn rational_normal_curve() -> Outcome {
    let ex = example(ExampleSpec::new(Family::Rnc).r(4));
    let g = geom_reg(&ex.ideal).map_err(|e| e.to_string())?;
    ensure(g.value == 2 && !g.degenerate, || format!("geom_reg {:?}", g))?;
    let mut rec = Vec::new();
    for a in 1..=3u32 {
        let got = sd(&ex.ideal, a)?;
        ensure(got <= 2 * a as i64, || format!("a={a}: sat.deg {got} > {}", 2 * a))?;
        if a >= 2 {
            let sharp = if got == 2 * a as i64 { " sharp" } else { "" };
            rec.push(format!("a={a}: {got}{sharp}"));
        }
    }
    Ok(format!("geom_reg 2; {}", rec.join(", ")))
}

fn zariski() -> Outcome {
    let mut out = Vec::new();
    for (degs, r) in [(vec![2u32, 2], 3usize), (vec![2, 3], 4)] {
        let ex = example(ExampleSpec::new(Family::CompleteIntersection).degrees(&degs).r(r));
        for a in 1..=3u32 {
            let got = sd(&ex.ideal, a)?;
            ensure(got == 0, || format!("CI {degs:?} in P^{r}, a={a}: sat.deg {got}"))?;
        }
        out.push(format!("{degs:?} in P^{r}"));
    }
    Ok(format!("all powers a<=3 saturated for {}", out.join(" and ")))
}

fn caviglia() -> Outcome {
    let golden: serde_json::Value =
        serde_json::from_str(include_str!("golden/caviglia_sat_degree.json")).map_err(|e| e.to_string())?;
    let mut vals = BTreeMap::new();
    for d in 3..=5u32 {
        let ex = example(ExampleSpec::new(Family::Caviglia).d(d));
        vals.insert(d, sd(&ex.ideal, 1)?);
    }
    for d in [3u32, 4] {
        let thm = 3 * d as i64 - 3;
        ensure(vals[&d] > thm, || format!("d={d}: sat.deg {} <= {thm}", vals[&d]))?;
    }
    for d in [3u32, 4] {
        let step = vals[&(d + 1)] - vals[&d];
        ensure(step > 3, || format!("d={d}->{}: increment {step}", d + 1))?;
    }
    for (d, v) in &vals {
        let g = golden["sat_degree"][d.to_string()].as_i64();
        ensure(g == Some(*v), || format!("d={d}: {v} differs from archived {g:?}"))?;
    }
    Ok(format!("sat.deg for d=3,4,5: {:?} (vs 3d-3 = 6, 9, 12)", vals.values().collect::<Vec<_>>()))
}

fn schur() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    for n in 1..=6u32 {
        let degs: Vec<i64> = (0..n).map(|_| rng.gen_range(0..4)).collect();
        let v = GradedMultiset::from_degrees(&degs);
        for a in 1..=5u32 {
            for k in 1..=5u32 {
                let h = hook_graded(a, k, &v).map_err(|e| e.to_string())?;
                let o = hook_rank_oracle(a, k, n);
                ensure(h.rank() == o, || format!("a={a} k={k} n={n}: rank {} vs {o}", h.rank()))?;
                cases += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for s in 0..20 {
        let len = rng.gen_range(2..=6usize);
        let mut d: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=5)).collect();
        d.sort_unstable_by(|x, y| y.cmp(x));
        let a = rng.gen_range(1..=4u32);
        let k = rng.gen_range(1..=len as u32);
        let h = hook_graded(a, k, &GradedMultiset::from_degrees(&d)).map_err(|e| e.to_string())?;
        let want = a as i64 * d[0] + d[1..k as usize].iter().sum::<i64>();
        ensure(h.max_degree() == Some(want), || format!("sequence {s} {d:?} a={a} k={k}: {:?} vs {want}", h.max_degree()))?;
    }
    Ok(format!("{cases} rank cases match tableau count; 20 max-degree cases"))
}

fn euler() -> Outcome {
    let ex = example(ExampleSpec::new(Family::GenericRegseq).degrees(&[2, 2, 2]).r(2).seed(0));
    let ds = DegreeSequence::new(vec![2, 2, 2], 2).map_err(|e| e.to_string())?;
    let mut n = 0;
    for a in 1..=2u32 {
        let ja = ideal_power(&ex.ideal, a).map_err(|e| e.to_string())?;
        let bound = degree_bound(a, &ds);
        for t in 0..=bound + 3 {
            let chi = be_euler_char(a, &ds, t).map_err(|e| e.to_string())?;
            let dim = ja.graded_dim(t as u32).map_err(|e| e.to_string())?;
            ensure(chi == dim.into(), || format!("a={a} t={t}: {chi} vs {dim}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} degrees agree"))
}

fn weyman() -> Outcome {
    let mut out = Vec::new();
    for spec in [ExampleSpec::new(Family::TwistedCubic), ExampleSpec::new(Family::CoordPoints)] {
        let ex = example(spec.clone());
        let u = minimal_resolution(&ex.ideal).map_err(|e| e.to_string())?.modules();
        for a in 1..=3u32 {
            for i in 0..=4u32 {
                let ok = weyman_reg_check(a, i, 2, &u).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{spec}: L_{i} for a={a} exceeds {}", 2 * a + i))?;
            }
        }
        out.push(spec.to_string());
    }
    Ok(format!("reg(L_i) <= 2a + i for {}", out.join(", ")))
}

fn footnote() -> Outcome {
    let mut n = 0;
    for spec in default_corpus() {
        let ex = example(spec.clone());
        for a in 1..=2u32 {
            let j = ideal_power(&ex.ideal, a).map_err(|e| e.to_string())?;
            let f = footnote_check(&j).map_err(|e| e.to_string())?;
            ensure(f.holds, || format!("{spec} a={a}: {f:?}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} ideals"))
}

fn corollary_c() -> Outcome {
    let mut checked = 0;
    let mut violations = Vec::new();
    for spec in default_corpus() {
        let ex = example(spec.clone());
        if !ex.is_smooth().map_err(|e| e.to_string())? {
            continue;
        }
        let ds = ex.degree_sequence().map_err(|e| e.to_string())?;
        for a in 1..=2u32 {
            let j = ideal_power(&ex.ideal, a).map_err(|e| e.to_string())?;
            let reg = arith_reg(&j).map_err(|e| e.to_string())?;
            let bound = degree_bound(a, &ds);
            checked += 1;
            if reg > bound {
                violations.push(format!("{spec} a={a}: arith.reg {reg} > {bound}"));
            }
        }
    }
    if violations.is_empty() {
        Ok(format!("{checked} cases"))
    } else {
        Err(format!("{} of {checked} cases violate the bound: {}", violations.len(), violations.join("; ")))
    }
}

fn veronese() -> Outcome {
    let ex = example(ExampleSpec::new(Family::Veronese));
    let m = geom_reg(&ex.ideal).map_err(|e| e.to_string())?.value;
    let sq = ideal_power(&ex.ideal, 2).map_err(|e| e.to_string())?;
    let s = geom_reg(&sq).map_err(|e| e.to_string())?.value;
    ensure(s <= 2 * m, || format!("reg sat(I^2) = {s} > 2 * {m}"))?;
    Ok(format!("reg sat(I^2) = {s} <= 2 reg(I) = {}", 2 * m))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("hyperplane saturation degrees", hyperplane),
        ("three coordinate points", three_points),
        ("Macaulay sharpness", macaulay),
        ("rational normal quartic", rational_normal_curve),
        ("saturated powers of complete intersections", zariski),
        ("Caviglia ideals exceed the smooth bound", caviglia),
        ("hook Schur ranks and top degrees", schur),
        ("Buchsbaum-Eisenbud Euler characteristic", euler),
        ("Weyman complex regularity", weyman),
        ("arith.reg = max(reg sat, sat.deg)", footnote),
        ("arith.reg of powers on smooth examples", corollary_c),
        ("Veronese surface square", veronese),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", k + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name} ({ms} ms): {detail}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
