use qbias::asymptotics::{
    bias_constant, boundary_check, convergence_report, digamma_diff, tauberian_log_predict, AsymptoticProfile,
    ClassicalTerm,
};
use qbias::bias::{
    all_pairs, compare_bias_with, conjecture_scan, cross_check, mod3_proposition, monotonicity_sweep,
    nonneg_suite, random_params, theorem1_sweep, theorem2_sweep, theorem2_witness, BiasSpec, Flavor, NonnegKind,
    SweepReport, Weights,
};
use qbias::identities::{standard_cases, verify_identity};
use qbias::oracle::oracle_bias;
use qbias::truncated::format_rational;
use qbias::{Error, Exec, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, to_value};

use crate::output::{fmt_f64, fmt_opt, Report, Status};
use crate::{Asymptotics, Command, SpecArgs, Verify};

/// Largest relative error accepted between a named profile and its closed form.
const PROFILE_TOLERANCE: f64 = 1e-12;

fn spec_of(s: &SpecArgs) -> Result<BiasSpec> {
    BiasSpec::new(s.a, s.b, s.m, Weights::exact(s.x.clone(), s.y.clone())?)
}

fn xy(spec: &BiasSpec) -> (String, String) {
    match &spec.weights {
        Weights::Exact { x, y } => (format_rational(x), format_rational(y)),
        Weights::Symbolic => ("X".into(), "Y".into()),
    }
}

fn body<T: serde::Serialize>(v: &T) -> serde_json::Value {
    to_value(v).expect("report serializes")
}

fn pass_if(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Violation
    }
}

pub fn dispatch(cmd: &Command, exec: Exec) -> Result<Report> {
    match cmd {
        Command::ComputeBias(c) => {
            let spec = spec_of(&c.spec)?;
            let r = compare_bias_with(&spec, c.n, c.method, exec)?;
            let summary = format!(
                "p_n({},{},{};{}) for n <= {} by {}: {} violations, {} equalities",
                spec.a,
                spec.b,
                spec.m,
                spec.weights,
                c.n,
                c.method,
                r.violations.len(),
                r.equalities().len()
            );
            let rows = csv_rows(&r.to_csv());
            Ok(Report::new("compute-bias", Status::Pass, summary, r.to_json_value())
                .table(vec!["n", "p_ab", "p_ba", "diff_sign"], rows))
        }
        Command::Verify(v) => verify(v, exec),
        Command::ScanConjecture(s) => {
            let r = conjecture_scan(s.a, s.b, s.m, s.n)?;
            let status = if r.inconclusive && s.horizon_guard {
                Status::Inconclusive
            } else {
                Status::Pass
            };
            let summary = format!(
                "d_n({a},{b};{m}) >= d_n({b},{a};{m}) for {} <= n <= {}{}",
                r.threshold,
                r.horizon,
                if r.inconclusive { " (violation near the horizon)" } else { "" },
                a = r.a,
                b = r.b,
                m = r.m
            );
            let row = vec![
                r.a.to_string(),
                r.b.to_string(),
                r.m.to_string(),
                r.horizon.to_string(),
                r.threshold.to_string(),
                r.inconclusive.to_string(),
                join(&r.violations),
            ];
            Ok(Report::new("scan-conjecture", status, summary, body(&r)).table(
                vec!["a", "b", "m", "horizon", "threshold", "inconclusive", "violations"],
                vec![row],
            ))
        }
        Command::Asymptotics(a) => asymptotics(a, exec),
        Command::Oracle(o) => {
            let spec = spec_of(&o.spec)?;
            let v = oracle_bias(&spec, o.n)?;
            let value = v.as_rational().map(|r| qbias::bias::format_value(&r)).unwrap_or_else(|| v.to_string());
            let (x, y) = xy(&spec);
            Ok(Report::new(
                "oracle",
                Status::Pass,
                format!("p_{}({},{},{};{}) = {value}", o.n, spec.a, spec.b, spec.m, spec.weights),
                json!({ "spec": body(&spec), "n": o.n, "value": value }),
            )
            .table(
                vec!["a", "b", "m", "x", "y", "n", "value"],
                vec![vec![
                    spec.a.to_string(),
                    spec.b.to_string(),
                    spec.m.to_string(),
                    x,
                    y,
                    o.n.to_string(),
                    value,
                ]],
            ))
        }
        Command::CrossCheck(c) => {
            let cases = cross_check(&all_pairs(c.m_max), &c.weights, c.n, exec)?;
            let bad = cases.iter().filter(|c| !c.agree()).count();
            let rows = cases
                .iter()
                .map(|k| {
                    let (x, y) = xy(&k.spec);
                    vec![
                        k.spec.a.to_string(),
                        k.spec.b.to_string(),
                        k.spec.m.to_string(),
                        x,
                        y,
                        k.gf_dp.to_string(),
                        k.gf_oracle.to_string(),
                        fmt_opt(k.first_mismatch),
                    ]
                })
                .collect();
            Ok(Report::new(
                "cross-check",
                pass_if(bad == 0),
                format!("{} cases up to m = {}, n <= {}: {bad} disagreements", cases.len(), c.m_max, c.n),
                json!({ "N": c.n, "m_max": c.m_max, "cases": body(&cases) }),
            )
            .table(vec!["a", "b", "m", "x", "y", "gf_dp", "gf_oracle", "first_mismatch"], rows))
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(";")
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| rec.expect("own csv").iter().map(str::to_string).collect())
        .collect()
}

fn sweep_report(command: &str, r: &SweepReport, monotone_only: bool) -> Report {
    let ok = if monotone_only { r.all_monotone() } else { r.passed() };
    let summary = format!(
        "{}: {} cases, n <= {}, {} violations, {} non-monotone",
        r.name,
        r.cases.len(),
        r.order,
        r.total_violations(),
        r.cases.iter().filter(|c| !c.monotone).count()
    );
    let rows = r
        .cases
        .iter()
        .map(|c| {
            let (x, y) = xy(&c.spec);
            vec![
                c.spec.a.to_string(),
                c.spec.b.to_string(),
                c.spec.m.to_string(),
                x,
                y,
                c.violations.len().to_string(),
                fmt_opt(c.violations.first()),
                c.monotone.to_string(),
            ]
        })
        .collect();
    Report::new(command, pass_if(ok), summary, body(r)).table(
        vec!["a", "b", "m", "x", "y", "violations", "first_violation", "monotone"],
        rows,
    )
}

fn verify(v: &Verify, exec: Exec) -> Result<Report> {
    match v {
        Verify::Thm1 { m_max, n } => Ok(sweep_report("verify thm1", &theorem1_sweep(*m_max, *n, exec)?, false)),
        Verify::Thm2 { m_max, n } => {
            let r = theorem2_sweep(*m_max, *n, exec)?;
            let mut report = sweep_report("verify thm2", &r, false);
            report.header.push("witness");
            for (row, c) in report.rows.iter_mut().zip(&r.cases) {
                row.push(fmt_opt(theorem2_witness(c.spec.a, c.spec.b, c.spec.m)));
            }
            Ok(report)
        }
        Verify::Lemma21 { m_max, n } => {
            Ok(sweep_report("verify lemma2-1", &monotonicity_sweep(*m_max, *n, exec)?, true))
        }
        Verify::Nonneg { kind, draws, n, seed } => {
            let kinds: Vec<NonnegKind> = match kind {
                Some(k) => vec![*k],
                None => NonnegKind::ALL.to_vec(),
            };
            let mut params = Vec::new();
            for k in &kinds {
                // one stream per kind so the draws do not depend on which kinds run
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(*k as u64));
                params.extend((0..*draws).map(|_| random_params(*k, &mut rng)));
            }
            let outcomes = exec.map(&params, |p| nonneg_suite(p, *n)).into_iter().collect::<Result<Vec<_>>>()?;
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let rows = outcomes
                .iter()
                .map(|o| {
                    vec![
                        o.kind.to_string(),
                        o.params.clone(),
                        o.order.to_string(),
                        o.passed.to_string(),
                        fmt_opt(o.first_negative),
                    ]
                })
                .collect();
            Ok(Report::new(
                "verify nonneg",
                pass_if(failed == 0),
                format!("{} draws over {} suites at N = {n}: {failed} failures", outcomes.len(), kinds.len()),
                json!({ "seed": seed, "N": n, "outcomes": body(&outcomes) }),
            )
            .table(vec!["kind", "params", "N", "passed", "first_negative"], rows))
        }
        Verify::Identities => {
            let cases = standard_cases();
            let reports = exec.map(&cases, verify_identity).into_iter().collect::<Result<Vec<_>>>()?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            let rows = reports
                .iter()
                .map(|r| {
                    vec![
                        r.identity.to_string(),
                        r.params.clone(),
                        r.mode.to_string(),
                        r.order.to_string(),
                        r.max_discrepancy.clone().unwrap_or_default(),
                        r.residual.map(fmt_f64).unwrap_or_default(),
                        r.passed.to_string(),
                    ]
                })
                .collect();
            Ok(Report::new(
                "verify identities",
                pass_if(failed == 0),
                format!("{} identity checks: {failed} failures", reports.len()),
                body(&reports),
            )
            .table(vec!["identity", "params", "mode", "order", "max_discrepancy", "residual", "passed"], rows))
        }
        Verify::Mod3 { n } => {
            let r = mod3_proposition(*n);
            let summary = format!(
                "d_n(1,2;3) - d_n(2,1;3) sign pattern for n <= {n}: {} failures, product form {}",
                r.failures_class2.len() + r.failures_other.len(),
                if r.product_form_agrees { "agrees" } else { "differs" }
            );
            let row = vec![
                n.to_string(),
                join(&r.failures_class2),
                join(&r.failures_other),
                r.product_form_agrees.to_string(),
            ];
            Ok(Report::new("verify mod3", pass_if(r.passed()), summary, body(&r)).table(
                vec!["horizon", "failures_class2", "failures_other", "product_form_agrees"],
                vec![row],
            ))
        }
    }
}

fn asymptotics(a: &Asymptotics, exec: Exec) -> Result<Report> {
    match a {
        Asymptotics::Constants { m_max } => {
            let mut constants = Vec::new();
            for m in 3..=*m_max {
                for k in (1..m).take_while(|k| 2 * k < m) {
                    for f in Flavor::ALL {
                        constants.push((bias_constant(k, m, f)?, digamma_diff(k, m)?));
                    }
                }
            }
            let rows = constants
                .iter()
                .map(|(c, d)| vec![c.a.to_string(), c.m.to_string(), c.flavor.to_string(), fmt_f64(c.value), fmt_f64(*d)])
                .collect();
            let list: Vec<_> = constants.iter().map(|(c, d)| json!({ "a": c.a, "m": c.m, "flavor": c.flavor, "value": c.value, "digamma_diff": d })).collect();
            Ok(Report::new(
                "asymptotics constants",
                Status::Pass,
                format!("{} bias constants for 3 <= m <= {m_max}", constants.len()),
                json!(list),
            )
            .table(vec!["a", "m", "flavor", "value", "digamma_diff"], rows))
        }
        Asymptotics::Predict {
            profile,
            alpha,
            beta,
            gamma,
            rho,
            n,
        } => {
            let (p, term) = match (profile.as_deref(), alpha) {
                (Some(name), _) => {
                    let t = ClassicalTerm::ALL
                        .into_iter()
                        .find(|t| t.tag() == name)
                        .ok_or_else(|| Error::Parse(format!("unknown profile '{name}', expected p, q or pbar")))?;
                    (t.profile(), Some(t))
                }
                (None, Some(al)) => (
                    AsymptoticProfile::new(*al, beta.unwrap_or(0.0), gamma.unwrap_or(0.0), rho.unwrap_or(0.0))?,
                    None,
                ),
                (None, None) => return Err(Error::InvalidParameter("give --profile or all of --alpha --beta --gamma --rho".into())),
            };
            if n.iter().any(|&k| !(k >= 1.0 && k.is_finite())) {
                return Err(Error::InvalidParameter("n must be finite and at least 1".into()));
            }
            let mut worst: f64 = 0.0;
            let mut rows = Vec::new();
            let mut list = Vec::new();
            for &k in n {
                let pred = tauberian_log_predict(&p, k);
                let reference = term.map(|t| t.log_main_term(k));
                let err = reference.map(|r| pred.relative_diff(&r));
                if let Some(e) = err {
                    worst = worst.max(e);
                }
                rows.push(vec![
                    fmt_f64(k),
                    fmt_f64(pred.ln().exp()),
                    fmt_f64(pred.ln()),
                    reference.map(|r| fmt_f64(r.ln())).unwrap_or_default(),
                    err.map(fmt_f64).unwrap_or_default(),
                ]);
                list.push(json!({
                    "n": k,
                    "value": pred.ln().exp(),
                    "ln_value": pred.ln(),
                    "ln_reference": reference.map(|r| r.ln()),
                    "rel_error": err,
                }));
            }
            let status = pass_if(term.is_none() || worst <= PROFILE_TOLERANCE);
            let summary = match term {
                Some(t) => format!("profile {} against its closed form: max relative error {}", t.tag(), fmt_f64(worst)),
                None => format!("main terms at {} points", n.len()),
            };
            Ok(Report::new(
                "asymptotics predict",
                status,
                summary,
                json!({
                    "profile": { "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "rho": p.rho },
                    "rows": list,
                }),
            )
            .table(vec!["n", "value", "ln_value", "ln_reference", "rel_error"], rows))
        }
        Asymptotics::Convergence {
            a,
            m,
            flavor,
            samples,
            n,
        } => {
            let r = convergence_report(*a, *m, *flavor, samples, *n, exec)?;
            let rows = r
                .rows
                .iter()
                .map(|row| vec![row.n.to_string(), fmt_f64(row.ratio), fmt_f64(row.reference), fmt_f64(row.abs_error)])
                .collect();
            let summary = format!(
                "R_n for (a,m) = ({a},{m}), flavor {flavor}: |R_n - c| {}",
                match r.trend {
                    Some(true) => "strictly decreasing",
                    Some(false) => "not strictly decreasing",
                    None => "has a single sample",
                }
            );
            Ok(Report::new("asymptotics convergence", pass_if(r.trend != Some(false)), summary, body(&r))
                .table(vec!["n", "value", "reference", "abs_error"], rows))
        }
        Asymptotics::Boundary {
            a,
            m,
            flavor,
            z,
            h,
            n,
        } => {
            let r = boundary_check(*a, *m, *flavor, z, *h, *n, exec)?;
            let rows = r
                .rows
                .iter()
                .map(|row| {
                    vec![
                        fmt_f64(row.z),
                        fmt_f64(row.value),
                        fmt_f64(row.reference),
                        fmt_f64((row.value - row.reference).abs()),
                        fmt_f64(row.ratio),
                    ]
                })
                .collect();
            let summary = format!(
                "G({a},{m}) flavor {flavor} at h = {h}: ratio {}",
                match r.improving {
                    Some(true) => "improves as z decreases",
                    Some(false) => "does not improve as z decreases",
                    None => "at a single z",
                }
            );
            Ok(Report::new("asymptotics boundary", pass_if(r.improving != Some(false)), summary, body(&r))
                .table(vec!["z", "value", "reference", "abs_error", "ratio"], rows))
        }
    }
}
