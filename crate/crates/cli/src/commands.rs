use std::path::Path;
use std::sync::Arc;

use rd_core::centroid::{verify_centroid_conditions, ActionSpec, CentroidStrategy, ConditionFit, Sampling};
use rd_core::fit::fit_log_log;
use rd_core::median::{
    chain_cover, hyperplane_poset, hyperplanes, interval_growth_check, is_median, wall_distance_check, GrowthRow,
};
use rd_core::spectral::{
    coeff_decay_sum, fit_rd_degree, kesten_gap, rd_profile_with, truncated_opnorm, FamilyTag, FnSpec,
    OpNormOptions, ProfileOptions, Reduction,
};
use rd_core::{Error, FiniteGraph, GroupHandle, GroupOptions, GroupSpec, Result};
use serde::Serialize;

use crate::output::{emit_summary, emit_table, FitSummary, Run, RunManifest};
use crate::{
    CentroidArgs, Cli, CoeffDecayArgs, Command, GraphArgs, GrowthArgs, HyperplaneArgs, KestenArgs, OpnormArgs,
    RdDegreeArgs,
};

pub fn run(cli: &Cli, argv: Vec<String>) -> Result<()> {
    let run = Run::start(argv, cli.cap);
    match &cli.command {
        Command::Growth(a) => growth(&run, cli.cap, a),
        Command::Opnorm(a) => opnorm(&run, cli.cap, a),
        Command::RdDegree(a) => rd_degree(&run, cli.cap, a),
        Command::Kesten(a) => kesten(&run, cli.cap, a),
        Command::MedianCheck(a) => median_check(&run, a),
        Command::Hyperplanes(a) => hyperplane_report(&run, a),
        Command::CentroidVerify(a) => centroid_verify(&run, cli.cap, a),
        Command::CoeffDecay(a) => coeff_decay(&run, cli.cap, a),
    }
}

fn load_group(spec: &str, cap: usize) -> Result<Arc<GroupHandle>> {
    let options = GroupOptions {
        cap,
        ..GroupOptions::default()
    };
    Ok(Arc::new(GroupHandle::with_options(GroupSpec::parse(spec)?, options)?))
}

fn load_graph(arg: &str) -> Result<FiniteGraph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read graph `{arg}`: {e}")))?;
        FiniteGraph::parse(&text)
    } else {
        FiniteGraph::named(arg)
    }
}

fn parse_fn(text: &str) -> Result<FnSpec> {
    text.parse()
}

#[derive(Serialize)]
struct GrowthCsvRow<'a> {
    group: &'a str,
    radius: u32,
    count: u64,
}

#[derive(Serialize)]
struct GrowthSidecar<'a> {
    kind: &'static str,
    group: String,
    generators: &'a [String],
    radius: u32,
    fit: Option<FitSummary>,
    manifest: RunManifest,
}

fn growth(run: &Run, cap: usize, a: &GrowthArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let gamma = group.growth(a.radius)?;
    let name = group.spec().to_string();
    let rows: Vec<GrowthCsvRow> = gamma
        .iter()
        .enumerate()
        .map(|(r, &count)| GrowthCsvRow {
            group: &name,
            radius: r as u32,
            count,
        })
        .collect();
    let (lo, hi) = a.window.unwrap_or((1, a.radius));
    let hi = hi.min(a.radius);
    let rs: Vec<u32> = (lo..=hi).collect();
    let ys: Vec<f64> = rs.iter().map(|&r| gamma[r as usize] as f64).collect();
    let fit = fit_log_log(&rs, &ys).map(|f| FitSummary::new((lo, hi), "ln(count)", f));
    let sidecar = GrowthSidecar {
        kind: "growth",
        group: name.clone(),
        generators: group.generator_names(),
        radius: a.radius,
        fit,
        manifest: run.manifest(Some(name.clone()), vec![]),
    };
    emit_table(a.out.as_deref(), &rows, &sidecar)
}

#[derive(Serialize)]
struct OpnormSummary {
    kind: &'static str,
    group: String,
    function: String,
    radius: u32,
    l1: f64,
    l2: f64,
    lower: f64,
    upper: f64,
    iterations: usize,
    converged: bool,
    reduction: Reduction,
    iteration_trace: Vec<f64>,
    manifest: RunManifest,
}

fn opnorm(run: &Run, cap: usize, a: &OpnormArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let spec = parse_fn(&a.function)?;
    let f = spec.build(&group)?;
    let opts = OpNormOptions {
        max_iters: a.iters,
        tol: a.tol,
        seed: a.seed,
        ..OpNormOptions::default()
    };
    let est = truncated_opnorm(&f, a.radius, opts)?;
    let mut seeds = vec![a.seed];
    if let FnSpec::Random { seed, .. } = spec {
        seeds.push(seed);
    }
    let name = group.spec().to_string();
    emit_summary(
        a.out.as_deref(),
        &OpnormSummary {
            kind: "opnorm",
            group: name.clone(),
            function: spec.to_string(),
            radius: a.radius,
            l1: f.l1(),
            l2: f.l2(),
            lower: est.lower,
            upper: est.upper,
            iterations: est.iterations,
            converged: est.converged,
            reduction: est.reduction,
            iteration_trace: est.iteration_trace,
            manifest: run.manifest(Some(name), seeds),
        },
    )
}

#[derive(Serialize)]
struct RdCsvRow<'a> {
    group: &'a str,
    family: FamilyTag,
    r: u32,
    l2: f64,
    op_lower: f64,
    op_upper: f64,
}

#[derive(Serialize)]
struct RdSidecar<'a> {
    kind: &'static str,
    group: String,
    family: FamilyTag,
    seed: u64,
    truncation_slack: u32,
    generators: &'a [String],
    fit: FitSummary,
    s_hat: f64,
    manifest: RunManifest,
}

fn rd_degree(run: &Run, cap: usize, a: &RdDegreeArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let opts = ProfileOptions {
        truncation_slack: a.slack,
        opnorm: OpNormOptions {
            max_iters: a.iters,
            tol: a.tol,
            seed: a.seed,
            ..OpNormOptions::default()
        },
    };
    let window = a.window.unwrap_or((1, a.rmax));
    if window.1 > a.rmax {
        return Err(Error::Usage(format!(
            "window end {} exceeds rmax {}",
            window.1, a.rmax
        )));
    }
    let profile = rd_profile_with(&group, a.family, a.rmax, a.seed, opts)?;
    let degree = fit_rd_degree(&profile, window)?;
    let name = group.spec().to_string();
    let rows: Vec<RdCsvRow> = profile
        .points
        .iter()
        .map(|p| RdCsvRow {
            group: &name,
            family: a.family,
            r: p.r,
            l2: p.l2,
            op_lower: p.op_lower,
            op_upper: p.op_upper,
        })
        .collect();
    let sidecar = RdSidecar {
        kind: "rdprofile",
        group: name.clone(),
        family: a.family,
        seed: a.seed,
        truncation_slack: a.slack,
        generators: group.generator_names(),
        fit: FitSummary {
            window: [window.0, window.1],
            x: "ln(1+r)",
            y: "ln(op_lower/l2)",
            slope: degree.slope,
            intercept: degree.intercept,
            r2: degree.r2,
        },
        s_hat: degree.s_hat,
        manifest: run.manifest(Some(name.clone()), vec![a.seed]),
    };
    emit_table(a.out.as_deref(), &rows, &sidecar)
}

#[derive(Serialize)]
struct KestenSummary {
    kind: &'static str,
    group: String,
    function: String,
    radius: u32,
    l1: f64,
    op_lower: f64,
    gap: f64,
    manifest: RunManifest,
}

fn kesten(run: &Run, cap: usize, a: &KestenArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let spec = parse_fn(&a.function)?;
    let f = spec.build(&group)?;
    let gap = kesten_gap(&f, a.radius, a.iters)?;
    let name = group.spec().to_string();
    emit_summary(
        a.out.as_deref(),
        &KestenSummary {
            kind: "kesten",
            group: name.clone(),
            function: spec.to_string(),
            radius: a.radius,
            l1: gap.l1,
            op_lower: gap.op_lower,
            gap: gap.gap,
            manifest: run.manifest(Some(name), vec![]),
        },
    )
}

#[derive(Serialize)]
struct Violation {
    triple: [String; 3],
    intersection: Vec<String>,
}

#[derive(Serialize)]
struct MedianSummary {
    kind: &'static str,
    graph: String,
    vertices: usize,
    edges: usize,
    median: bool,
    violation: Option<Violation>,
    manifest: RunManifest,
}

fn median_check(run: &Run, a: &GraphArgs) -> Result<()> {
    let graph = load_graph(&a.graph)?;
    let violation = is_median(&graph)?;
    let summary = MedianSummary {
        kind: "median-check",
        graph: a.graph.clone(),
        vertices: graph.len(),
        edges: graph.edges().len(),
        median: violation.is_none(),
        violation: violation.as_ref().map(|v| Violation {
            triple: v.triple.map(|x| graph.label(x)),
            intersection: v.intersection.iter().map(|&x| graph.label(x)).collect(),
        }),
        manifest: run.manifest(None, vec![]),
    };
    emit_summary(a.out.as_deref(), &summary)?;
    match violation {
        Some(v) => Err(v.into_error(&graph)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct WallSummary {
    id: usize,
    edges: usize,
    halfspace_sizes: [usize; 2],
}

#[derive(Serialize)]
struct PairSummary {
    u: String,
    v: String,
    distance: u32,
    separating: usize,
    equal: bool,
    width: usize,
    chains: Vec<Vec<usize>>,
    growth: Vec<GrowthRow>,
}

#[derive(Serialize)]
struct HyperplaneSummary {
    kind: &'static str,
    graph: String,
    vertices: usize,
    edges: usize,
    hyperplanes: Vec<WallSummary>,
    pair: Option<PairSummary>,
    manifest: RunManifest,
}

fn hyperplane_report(run: &Run, a: &HyperplaneArgs) -> Result<()> {
    let graph = load_graph(&a.graph.graph)?;
    let walls = hyperplanes(&graph)?;
    let pair = match a.pair {
        None => None,
        Some((u, v)) => {
            let check = wall_distance_check(&graph, &walls, u, v)?;
            let cover = chain_cover(&hyperplane_poset(&walls, u, v));
            let (_, growth) = interval_growth_check(&graph, &walls, u, v, check.d)?;
            Some(PairSummary {
                u: graph.label(u),
                v: graph.label(v),
                distance: check.d,
                separating: check.separating,
                equal: check.equal,
                width: cover.width,
                chains: cover.chains,
                growth,
            })
        }
    };
    let failure = pair.as_ref().and_then(|p| {
        if !p.equal {
            Some(format!(
                "d({}, {}) = {} but {} hyperplanes separate them",
                p.u, p.v, p.distance, p.separating
            ))
        } else if let Some(row) = p.growth.iter().find(|r| !r.holds) {
            Some(format!("interval growth {} exceeds {} at r = {}", row.count, row.bound, row.r))
        } else {
            None
        }
    });
    let summary = HyperplaneSummary {
        kind: "hyperplanes",
        graph: a.graph.graph.clone(),
        vertices: graph.len(),
        edges: graph.edges().len(),
        hyperplanes: walls
            .iter()
            .map(|h| {
                let (lower, upper) = h.halfspaces();
                WallSummary {
                    id: h.id,
                    edges: h.edges.len(),
                    halfspace_sizes: [lower.len(), upper.len()],
                }
            })
            .collect(),
        pair,
        manifest: run.manifest(None, vec![]),
    };
    emit_summary(a.graph.out.as_deref(), &summary)?;
    match failure {
        Some(reason) => Err(Error::CheckFailed(reason)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct CentroidCsvRow {
    r: u32,
    cond1_max: usize,
    cond2_max: usize,
    cond3_max: usize,
}

#[derive(Serialize)]
struct CentroidSidecar<'a> {
    kind: &'static str,
    group: String,
    strategy: CentroidStrategy,
    generators: &'a [String],
    sampling: Sampling,
    fit_window: [u32; 2],
    fit: Option<ConditionFit>,
    manifest: RunManifest,
}

fn centroid_verify(run: &Run, cap: usize, a: &CentroidArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let action = ActionSpec::cayley_self(group.clone());
    let sample = a.sample.unwrap_or(usize::MAX);
    let report = verify_centroid_conditions(&action, a.strategy, a.rmax, a.hradius, sample, a.seed)?;
    let rows: Vec<CentroidCsvRow> = (0..report.r_values.len())
        .map(|k| CentroidCsvRow {
            r: report.r_values[k],
            cond1_max: report.cond1_max[k],
            cond2_max: report.cond2_max[k],
            cond3_max: report.cond3_max[k],
        })
        .collect();
    let name = group.spec().to_string();
    let sidecar = CentroidSidecar {
        kind: "centroid",
        group: name.clone(),
        strategy: a.strategy,
        generators: group.generator_names(),
        sampling: report.sampling.clone(),
        fit_window: [2, a.rmax],
        fit: report.fit.clone(),
        manifest: run.manifest(Some(name), vec![a.seed]),
    };
    emit_table(a.out.as_deref(), &rows, &sidecar)
}

#[derive(Serialize)]
struct CoeffDecaySummary {
    kind: &'static str,
    group: String,
    xi: String,
    eta: String,
    s: f64,
    radius: u32,
    value: f64,
    manifest: RunManifest,
}

fn coeff_decay(run: &Run, cap: usize, a: &CoeffDecayArgs) -> Result<()> {
    let group = load_group(&a.group, cap)?;
    let (xi_spec, eta_spec) = (parse_fn(&a.xi)?, parse_fn(&a.eta)?);
    let xi = xi_spec.build(&group)?;
    let eta = eta_spec.build(&group)?;
    let value = coeff_decay_sum(&xi, &eta, a.s, a.radius)?;
    let seeds = [&xi_spec, &eta_spec]
        .iter()
        .filter_map(|s| match s {
            FnSpec::Random { seed, .. } => Some(*seed),
            _ => None,
        })
        .collect();
    let name = group.spec().to_string();
    emit_summary(
        a.out.as_deref(),
        &CoeffDecaySummary {
            kind: "coeff-decay",
            group: name.clone(),
            xi: xi_spec.to_string(),
            eta: eta_spec.to_string(),
            s: a.s,
            radius: a.radius,
            value,
            manifest: run.manifest(Some(name), seeds),
        },
    )
}
