//! One pipeline per subcommand. Each returns a deterministic report body.

use serde_json::{json, Value};

use kstab::appendix::{initial_algebra_census, verify_claim1, verify_claim2, BigradedAlgebraTable};
use kstab::corpus::{appendix_generators, appendix_lambda, p1};
use kstab::filtration::{weight_functions, Filtration, ReesPresentation};
use kstab::invariants::{df_and_norm, distance, pair, perp_from_projection, project_torus, ProjectionReport, Verdict};
use kstab::specialize::{rees_initial, specialize, specialize_tc, OneParamSubgroup, TcOutcome, Torus};
use kstab::Error;

use crate::error::CliError;
use crate::job::Job;
use crate::report::{self, ints, opt_q, q, qs, quasi_fit, Output};

pub const DEFAULT_KMAX: usize = 24;
pub const DEFAULT_APPENDIX_BOUND: usize = 8;
pub const DEFAULT_APPENDIX_KMAX: usize = 12;

/// Command-line overrides; anything unset falls back to the job's options.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub kmax: Option<usize>,
    pub window: Option<usize>,
    pub seed: Option<u64>,
    pub rmax: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Settings {
    kmax: usize,
    window: Option<usize>,
    seed: u64,
    rmax: Option<usize>,
}

fn settings(job: &Job, o: &Overrides) -> Settings {
    Settings {
        kmax: o.kmax.or(job.options.kmax).unwrap_or(DEFAULT_KMAX),
        window: o.window.or(job.options.window),
        seed: o.seed.or(job.options.seed).unwrap_or(0),
        rmax: o.rmax.or(job.options.rmax),
    }
}

fn core(context: &str) -> impl FnOnce(Error) -> CliError + '_ {
    move |source| CliError::Core { context: context.to_string(), source }
}

fn one(job: &Job) -> Result<&ReesPresentation, CliError> {
    match job.filtrations.as_slice() {
        [f] => Ok(f),
        other => Err(CliError::Usage(format!("expected one filtration, found {}", other.len()))),
    }
}

fn two(job: &Job) -> Result<(&ReesPresentation, &ReesPresentation), CliError> {
    match job.filtrations.as_slice() {
        [a, b] => Ok((a, b)),
        other => Err(CliError::Usage(format!("expected two filtrations, found {}", other.len()))),
    }
}

fn torus_of(job: &Job) -> Result<&Torus, CliError> {
    job.torus.as_ref().ok_or_else(|| CliError::Usage("this command needs a `torus` block".into()))
}

fn inputs(job: &Job, s: &Settings) -> Value {
    json!({
        "ring": report::ring(&job.ring),
        "filtrations": job.filtrations.iter().map(report::presentation).collect::<Vec<_>>(),
        "torus": job.torus.as_ref().map(torus),
        "one_param": job.one_param.as_ref().map(|l| l.weights().to_vec()),
        "kmax": s.kmax,
        "window": s.window,
        "seed": s.seed,
        "rmax": s.rmax,
    })
}

fn torus(t: &Torus) -> Value {
    json!({ "cocharacters": t.cocharacters(), "maximal_asserted": t.maximal() })
}

/// Weight functions, DF and norm of the single filtration.
pub fn df(job: &Job, o: &Overrides) -> Result<Output, CliError> {
    let s = settings(job, o);
    let f = one(job)?;
    let wd = weight_functions(f, s.kmax, s.window).map_err(core("weight functions"))?;
    let inv = df_and_norm(&wd, f.label());
    let mut warnings = Vec::new();
    if let Err(e) = &inv {
        warnings.push(format!("no certified invariants: {e}; raise --kmax or move --window"));
    }
    let inv = inv.ok();
    Ok(Output {
        certified: inv.is_some(),
        body: json!({
            "command": "df",
            "inputs": inputs(job, &s),
            "weights": report::weights(&wd),
            "df": opt_q(inv.as_ref().map(|r| &r.df)),
            "norm_sq": opt_q(inv.as_ref().map(|r| &r.norm_sq)),
            "certified": inv.is_some(),
            "warnings": warnings,
        }),
    })
}

fn pairing_body(f1: &dyn Filtration, f2: &dyn Filtration, s: &Settings) -> Result<(Value, bool), CliError> {
    let data = pair(f1, f2, s.kmax, s.window).map_err(core("pairing"))?;
    let mut warnings = Vec::new();
    if let Some(e) = &data.fit_error {
        warnings.push(format!("pairing did not certify: {e}; the tail estimate is not a certified value"));
    }
    let body = json!({
        "P": qs(&data.p),
        "P_bar": qs(&data.p_bar),
        "h": ints(&data.h),
        "w1": ints(&data.w1),
        "w2": ints(&data.w2),
        "d1": ints(&data.d1),
        "d2": ints(&data.d2),
        "fits": data.fits.as_ref().map(|[h, w1, w2, p]| json!({
            "h": quasi_fit(h), "w1": quasi_fit(w1), "w2": quasi_fit(w2), "P": quasi_fit(p),
        })),
        "value": opt_q(data.value.as_ref()),
        "tail_estimate": opt_q(data.tail_estimate.as_ref()),
        "certified": data.certified(),
        "cauchy_schwarz_per_degree": data.cauchy_schwarz_holds(),
        "warnings": warnings,
    });
    Ok((body, data.certified()))
}

fn angle_body(f1: &dyn Filtration, f2: &dyn Filtration, s: &Settings, per_k: bool) -> Result<(Value, bool), CliError> {
    match distance(f1, f2, s.kmax, s.window) {
        Ok(d) => {
            let mut v = json!({
                "norm1_sq": q(&d.norm1_sq),
                "norm2_sq": q(&d.norm2_sq),
                "cosine": opt_q(d.cosine.as_ref()),
                "cosine_sq": q(&d.cosine_sq),
                "cosine_sign": d.cosine_sign,
                "angle": d.angle,
            });
            if per_k {
                v["per_k_angles"] = json!(d.per_k_angles);
            }
            Ok((v, true))
        }
        Err(Error::ZeroNorm) => Ok((json!({ "zero_norm": true, "warnings": [Error::ZeroNorm.to_string()] }), true)),
        Err(e @ (Error::UncertifiedFit | Error::NotYetPolynomial(_) | Error::WindowTooShort { .. })) => {
            Ok((json!({ "warnings": [format!("no certified angle: {e}")] }), false))
        }
        Err(e) => Err(CliError::Core { context: "distance".into(), source: e }),
    }
}

/// `⟨χ1, χ2⟩` with its sequences, plus the angle when both norms are positive.
pub fn pair_cmd(job: &Job, o: &Overrides) -> Result<Output, CliError> {
    let s = settings(job, o);
    let (a, b) = two(job)?;
    let (pairing, c1) = pairing_body(a, b, &s)?;
    let (angle, c2) = angle_body(a, b, &s, false)?;
    Ok(Output {
        certified: c1 && c2,
        body: json!({ "command": "pair", "inputs": inputs(job, &s), "pairing": pairing, "angle": angle }),
    })
}

/// The angle between two filtrations with its per-degree approximations.
pub fn distance_cmd(job: &Job, o: &Overrides) -> Result<Output, CliError> {
    let s = settings(job, o);
    let (a, b) = two(job)?;
    let (angle, certified) = angle_body(a, b, &s, true)?;
    Ok(Output { certified, body: json!({ "command": "distance", "inputs": inputs(job, &s), "angle": angle }) })
}

fn first_weight_difference(a: &dyn Filtration, b: &dyn Filtration, kmax: usize) -> Result<Option<usize>, CliError> {
    for k in 0..=kmax {
        let (f, g) = (a.flag(k).map_err(core("flags"))?, b.flag(k).map_err(core("flags"))?);
        if f.levels() != g.levels() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn cross_check(f: &ReesPresentation, lambda: &OneParamSubgroup, spec: &dyn Filtration, kmax: usize) -> Result<(), CliError> {
    let oracle = rees_initial(f, lambda, kmax, None).map_err(core("initial algebra"))?;
    for k in 0..=kmax {
        if oracle.flag(k).map_err(core("initial algebra"))? != spec.flag(k).map_err(core("specialisation"))? {
            return Err(CliError::Core {
                context: "specialisation".into(),
                source: Error::CrossCheck(format!("specialisation and initial algebra disagree in degree {k}")),
            });
        }
    }
    Ok(())
}

/// Specialisation along a generic one-parameter subgroup of the torus and a
/// finitely generated re-presentation; or, with only `one_param`, the
/// specialisation along that subgroup.
pub fn specialize_cmd(job: &Job, o: &Overrides) -> Result<Output, CliError> {
    let s = settings(job, o);
    let f = one(job)?;
    if let Some(t) = &job.torus {
        let tc = specialize_tc(f, t, s.kmax, s.rmax, s.seed).map_err(core("specialisation"))?;
        cross_check(f, &tc.lambda, &tc.specialized, s.kmax)?;
        let moved = first_weight_difference(f, &tc.specialized, s.kmax)?;
        let unchanged = tc.specialized.same_flags(&kstab::filtration::tabulate(f, s.kmax).map_err(core("flags"))?);
        let mut warnings = Vec::new();
        if tc.input_equivariant && unchanged {
            warnings.push("already equivariant, unchanged".to_string());
        }
        let stable = matches!(tc.outcome, TcOutcome::Stable { .. });
        if let Err(e) = tc.require_stable() {
            warnings.push(format!(
                "{e}; the specialisation need not be finitely generated. Raise --kmax (and rmax) to look further"
            ));
        }
        let outcome = match tc.outcome {
            TcOutcome::Stable { r } => json!({ "stable": true, "r": r }),
            TcOutcome::Unstable { disagreement } => json!({ "stable": false, "first_disagreement": disagreement }),
        };
        return Ok(Output {
            certified: stable,
            body: json!({
                "command": "specialize",
                "inputs": inputs(job, &s),
                "lambda": tc.lambda.weights(),
                "input_equivariant": tc.input_equivariant,
                "levels_preserved": moved.is_none(),
                "cross_check": "passed",
                "steps": tc.steps.iter().map(|st| json!({
                    "r": st.r,
                    "generators": st.generators,
                    "agrees_through": st.first_disagreement.map_or(s.kmax, |k| k - 1),
                })).collect::<Vec<_>>(),
                "outcome": outcome,
                "approximation": tc.presentation.as_ref().map(report::presentation),
                "output_equivariant": tc.output_equivariant,
                "warnings": warnings,
            }),
        });
    }
    let lambda = job
        .one_param
        .as_ref()
        .ok_or_else(|| CliError::Usage("specialize needs a `torus` or a `one_param` block".into()))?;
    let spec = specialize(f, lambda, s.kmax).map_err(core("specialisation"))?;
    cross_check(f, lambda, &spec, s.kmax)?;
    let moved = first_weight_difference(f, &spec, s.kmax)?;
    let rank_one = Torus::new(job.ring.clone(), vec![lambda.weights().to_vec()]).map_err(core("one_param"))?;
    let equivariant = kstab::filtration::is_equivariant(&spec, &rank_one, s.kmax).map_err(core("equivariance"))?;
    let input_equivariant = kstab::filtration::is_equivariant(f, &rank_one, s.kmax).map_err(core("equivariance"))?;
    let mut warnings = Vec::new();
    if input_equivariant {
        warnings.push("already equivariant, unchanged".to_string());
    }
    Ok(Output {
        certified: true,
        body: json!({
            "command": "specialize",
            "inputs": inputs(job, &s),
            "lambda": lambda.weights(),
            "input_equivariant": input_equivariant,
            "levels_preserved": moved.is_none(),
            "cross_check": "passed",
            "output_equivariant": equivariant,
            "graded_dims": (0..=s.kmax)
                .map(|k| spec.flag(k).map(|fl| fl.graded_dims()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(core("flags"))?,
            "warnings": warnings,
        }),
    })
}

fn projection_body(p: &ProjectionReport) -> Value {
    json!({
        "basis": p.basis.iter().map(|d| json!({
            "weights": qs(&d.weights),
            "norm_sq": q(&d.norm_sq),
            "pairing": opt_q(d.pairing.as_ref()),
            "coefficient": opt_q(d.coefficient.as_ref()),
        })).collect::<Vec<_>>(),
        "dropped": p.dropped,
        "norm_sq": opt_q(p.norm_sq.as_ref()),
        "norm_t_sq": opt_q(p.norm_t_sq.as_ref()),
        "projection": p.projection.as_deref().map(qs),
        "verdict": p.verdict.as_str(),
        "equivariant": p.equivariant,
        "maximal_asserted": p.maximal_asserted,
        "warnings": p.warnings,
    })
}

/// L² projection onto the torus, its verdict, and the orthogonal part when
/// the input is equivariant.
pub fn project_cmd(job: &Job, o: &Overrides) -> Result<Output, CliError> {
    let s = settings(job, o);
    let f = one(job)?;
    let t = torus_of(job)?;
    let projection = project_torus(f, t, s.kmax, s.window).map_err(core("projection"))?;
    let certified = projection.verdict != Verdict::Uncertified;
    let body_projection = projection_body(&projection);
    let perp = if projection.equivariant && certified {
        let p = perp_from_projection(f, projection, s.kmax, s.window).map_err(core("orthogonal part"))?;
        json!({ "df": q(&p.df), "df_perp": q(&p.df_perp), "norm_perp_sq": q(&p.norm_perp_sq) })
    } else {
        Value::Null
    };
    Ok(Output {
        certified,
        body: json!({ "command": "project", "inputs": inputs(job, &s), "projection": body_projection, "perp": perp }),
    })
}

#[derive(Debug, Clone, Copy)]
pub struct AppendixOptions {
    pub max_degree: usize,
    pub kmax: usize,
    pub jmax: usize,
}

impl Default for AppendixOptions {
    fn default() -> Self {
        AppendixOptions { max_degree: DEFAULT_APPENDIX_BOUND, kmax: DEFAULT_APPENDIX_KMAX, jmax: DEFAULT_APPENDIX_KMAX }
    }
}

/// Membership claims for the built-in example and the initial-algebra census.
pub fn appendix_cmd(opts: AppendixOptions) -> Result<Output, CliError> {
    let ring = p1();
    let table = BigradedAlgebraTable::new(ring.clone(), appendix_generators(&ring), opts.kmax, opts.jmax)
        .map_err(core("algebra table"))?;
    let c1 = verify_claim1(&table, opts.max_degree).map_err(core("claim 1"))?;
    let c2 = verify_claim2(&table, opts.max_degree).map_err(core("claim 2"))?;
    let census = initial_algebra_census(&table, &appendix_lambda(&ring), opts.max_degree).map_err(core("census"))?;
    let generators: Vec<String> = table.generators().iter().map(|g| format!("t^{} ({})", g.t, ring.display(&g.element))).collect();
    Ok(Output {
        certified: true,
        body: json!({
            "command": "appendix",
            "inputs": {
                "generators": generators,
                "lambda": [-1, 1],
                "max_degree": opts.max_degree,
                "kmax": opts.kmax,
                "jmax": opts.jmax,
            },
            "claim1": {
                "statement": "t^(n-1) x y^n lies in A, and no element of A of R-degree n+1 and lower t-degree has an x y^n term",
                "pass": c1.pass,
                "entries": c1.entries.iter().map(|e| json!({
                    "n": e.n,
                    "contains_monomial": e.contains_monomial,
                    "lower_components": e.lower_components,
                    "pass": e.pass,
                })).collect::<Vec<_>>(),
            },
            "claim2": {
                "statement": "t^k y^j does not lie in A for k <= j",
                "pass": c2.pass,
                "failures": c2.entries.iter().filter(|e| !e.pass).map(|e| json!({ "j": e.j, "k": e.k })).collect::<Vec<_>>(),
                "checked": c2.entries.len(),
            },
            "census": {
                "note": "bounded-degree evidence that the initial algebra is not finitely generated; not a proof",
                "bound": census.bound,
                "degrees_examined": census.kmax,
                "generator_count": census.generator_count(),
                "entries": census.entries.iter().map(|e| json!({
                    "degree": e.k,
                    "level": e.j,
                    "new_generators": e.new_generators(),
                })).collect::<Vec<_>>(),
                "generator_bidegrees": census.generator_bidegrees(),
            },
            "pass": c1.pass && c2.pass,
        }),
    })
}
