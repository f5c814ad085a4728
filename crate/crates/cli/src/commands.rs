use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tilting_core::bwb::{bott_euler, flag_cohomology, localization_euler, CohomologyResult, FlagSpace, HomogeneousBundle};
use tilting_core::collections::{
    beilinson_collection, flag_collection, kapranov_collection, kapranov_sub_collection, verify_tilting, wedge_collection, CollectionKind,
    CollectionSpec, VerificationReport, Violation,
};
use tilting_core::descent::{
    bs_tilting_summary, generalized_bs_summary, parse_tower, twisted_tower_summary, CSAClass, DescentSummary, IndexModel,
};
use tilting_core::fibration::{tower_at_twists, tower_compose, FibrationPlan, PlanFile};
use tilting_core::partitions::{enumerate_box_partitions, OrderTag, Partition};
use tilting_core::schur::{lr_coefficients, schur_dimension, GLWeight};
use tilting_core::{Error, Result};

use crate::report::{matrix, num, nums, object, strs, Report, Verdict};

#[derive(Parser, Debug)]
#[command(name = "tilting", version, about = "Exact Ext tables for tilting bundles on Grassmannians, flags and fibrations")]
pub struct Cli {
    /// Render the report as indented text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Worker threads for the engine.
    #[arg(long, global = true, env = "TILTING_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partitions in a rows x cols box.
    Partitions {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: u32,
        #[arg(long, value_enum, default_value_t = Order::Containment)]
        order: Order,
    },
    /// Littlewood–Richardson coefficients of a product.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        a: Partition,
        #[arg(long, value_parser = parse_partition)]
        b: Partition,
        /// Drop terms with more rows than this.
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Dimension of an irreducible GL_n representation.
    SchurDim {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
        #[arg(long)]
        n: usize,
    },
    /// Cohomology of a homogeneous bundle by Borel–Weil–Bott.
    Bott(BottArgs),
    /// Euler characteristic of Hom between Schur functors, two ways.
    Euler {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        a: Partition,
        #[arg(long, value_parser = parse_partition)]
        b: Partition,
    },
    /// Verify a collection is tilting.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Descent bookkeeping for twisted forms.
    Descent {
        #[command(subcommand)]
        target: DescentTarget,
    },
    /// Relative tilting bundles on fibrations.
    Fibration {
        #[command(subcommand)]
        target: FibrationTarget,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Order {
    Size,
    Containment,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "bundle")]
pub struct BottWeight {
    /// Σ^w(R^∨) for the first tautological subbundle.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    sub_dual: Option<Vec<i64>>,
    /// Σ^w(R).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    sub: Option<Vec<i64>>,
    /// Σ^w(Q) for the final quotient.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    quot: Option<Vec<i64>>,
    /// Raw blocks separated by '|', e.g. "1,0|0".
    #[arg(long, allow_hyphen_values = true)]
    blocks: Option<String>,
}

#[derive(Args, Debug)]
pub struct BottArgs {
    /// grass:D,N | proj:M | flag:L1,L2,...;N | fullflag:N
    #[arg(long, value_parser = parse_space)]
    space: FlagSpace,
    #[command(flatten)]
    weight: BottWeight,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyOpts {
    /// Multiplicities, one per object.
    #[arg(long, value_delimiter = ',')]
    mult: Option<Vec<i64>>,
    /// Tensor every object with ⊗ det(R_k^∨)^{t_k}; one value applies to every stage.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    twist: Option<Vec<i64>>,
    /// List the objects in the opposite order.
    #[arg(long)]
    reverse: bool,
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    /// Σ^λ(R^∨) on Grass(d, n); with --sub, Σ^λ(R).
    Kapranov {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sub: bool,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Products of Kapranov objects on Flag(steps; n).
    Flag {
        #[arg(long, value_delimiter = ',')]
        steps: Vec<i64>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// O, ..., O(n) on P^n.
    Beilinson {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Wedge-power bundles on Grass(d, n).
    Wedge {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    #[arg(long)]
    degree: u64,
    #[arg(long)]
    period: u64,
    /// Explicit indices of powers, e.g. "1:4,2:2,3:4".
    #[arg(long, value_parser = parse_index_table)]
    index_table: Option<BTreeMap<u64, u64>>,
}

impl AlgebraArgs {
    fn class(&self) -> Result<CSAClass> {
        let model = match &self.index_table {
            None => IndexModel::PeriodEqualsIndex,
            Some(t) => IndexModel::Explicit(t.clone()),
        };
        CSAClass::new(self.degree, self.period, model)
    }

    fn echo(&self) -> Vec<(&'static str, Value)> {
        let mut v = vec![("degree", num(self.degree)), ("period", num(self.period))];
        if let Some(t) = &self.index_table {
            v.push(("index_table", Value::Object(t.iter().map(|(k, x)| (k.to_string(), num(x))).collect())));
        }
        v
    }
}

#[derive(Subcommand, Debug)]
pub enum DescentTarget {
    /// Brauer–Severi variety of the algebra.
    Bs {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Number of twists W_0, ..., W_{range-1}.
        #[arg(long)]
        range: Option<usize>,
    },
    /// Generalized Brauer–Severi variety of d-dimensional subspaces.
    Gbs {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        d: usize,
    },
    /// A tower of stages read from a JSON file.
    Tower {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum FibrationTarget {
    /// Evaluate a plan at the twists given in the file (default 0).
    Plan {
        #[arg(long)]
        file: PathBuf,
    },
    /// Search the smallest twist at every stage.
    Search {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
}

fn parse_ints(s: &str) -> std::result::Result<Vec<i64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let parts = parse_ints(s)?;
    if parts.iter().any(|&x| x < 0) {
        return Err("partition parts must be non-negative".into());
    }
    Partition::new(parts.into_iter().map(|x| x as u32).collect()).map_err(|e| e.to_string())
}

fn parse_space(s: &str) -> std::result::Result<FlagSpace, String> {
    let (kind, rest) = s.split_once(':').ok_or("expected kind:params")?;
    let usizes = |t: &str| -> std::result::Result<Vec<usize>, String> {
        parse_ints(t)?.into_iter().map(|x| usize::try_from(x).map_err(|_| format!("negative value {x}"))).collect()
    };
    let space = match kind {
        "grass" => match usizes(rest)?.as_slice() {
            [d, n] => FlagSpace::grassmannian(*d, *n),
            _ => return Err("grass:D,N".into()),
        },
        "proj" => match usizes(rest)?.as_slice() {
            [m] => FlagSpace::projective(*m),
            _ => return Err("proj:M".into()),
        },
        "fullflag" => match usizes(rest)?.as_slice() {
            [n] => FlagSpace::full_flag(*n),
            _ => return Err("fullflag:N".into()),
        },
        "flag" => {
            let (steps, n) = rest.split_once([';', '/']).ok_or("flag:L1,L2,...;N")?;
            match usizes(n)?.as_slice() {
                [n] => FlagSpace::new(usizes(steps)?, *n),
                _ => return Err("flag:L1,L2,...;N".into()),
            }
        }
        other => return Err(format!("unknown space kind {other:?}")),
    };
    space.map_err(|e| e.to_string())
}

fn parse_index_table(s: &str) -> std::result::Result<BTreeMap<u64, u64>, String> {
    s.split(',')
        .map(|pair| {
            let (k, v) = pair.split_once(':').ok_or_else(|| format!("{pair:?} is not residue:index"))?;
            Ok((k.trim().parse().map_err(|e| format!("{k:?}: {e}"))?, v.trim().parse().map_err(|e| format!("{v:?}: {e}"))?))
        })
        .collect()
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Partitions { rows, cols, order } => {
            let tag = match order {
                Order::Size => OrderTag::SizeOrder,
                Order::Containment => OrderTag::ContainmentOrder,
            };
            let set = enumerate_box_partitions(*rows, *cols, tag)?;
            Ok(Report {
                command: "partitions".into(),
                inputs: object([("rows", num(rows)), ("cols", num(cols)), ("order", json!(tag.as_str()))]),
                result: object([("count", num(set.len())), ("members", strs(&set.members)), ("order_tag", json!(tag.as_str()))]),
                verdict: Verdict::NotApplicable,
            })
        }
        Command::Lr { a, b, rows } => {
            let max_rows = rows.unwrap_or(a.len() + b.len());
            let table = lr_coefficients(a, b, max_rows);
            let terms: Vec<Value> = table.iter().map(|(nu, c)| object([("nu", json!(nu.to_string())), ("coefficient", num(c))])).collect();
            Ok(Report {
                command: "lr".into(),
                inputs: object([("a", json!(a.to_string())), ("b", json!(b.to_string())), ("rows", num(max_rows))]),
                result: object([("terms", Value::Array(terms))]),
                verdict: Verdict::NotApplicable,
            })
        }
        Command::SchurDim { weight, n } => {
            let w = GLWeight::new(weight.clone())?;
            let dim = schur_dimension(&w, *n)?;
            Ok(Report {
                command: "schur-dim".into(),
                inputs: object([("weight", nums(weight)), ("n", num(n))]),
                result: object([("dimension", num(dim))]),
                verdict: Verdict::NotApplicable,
            })
        }
        Command::Bott(args) => bott(args),
        Command::Euler { d, n, a, b } => {
            let loc = localization_euler(a, b, *d, *n)?;
            let bwb = bott_euler(a, b, *d, *n)?;
            let agree = loc == bwb;
            Ok(Report {
                command: "euler".into(),
                inputs: object([("d", num(d)), ("n", num(n)), ("a", json!(a.to_string())), ("b", json!(b.to_string()))]),
                result: object([("localization", num(&loc)), ("bott", num(&bwb)), ("agree", json!(agree))]),
                verdict: Verdict::from_bool(agree),
            })
        }
        Command::Verify { target } => verify(target),
        Command::Descent { target } => descent(target),
        Command::Fibration { target } => fibration(target),
        Command::Selftest => {
            let outcomes = crate::acceptance::run_all();
            let ok = outcomes.iter().all(|o| o.passed);
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| object([("id", num(o.id)), ("title", json!(o.title)), ("passed", json!(o.passed)), ("detail", json!(o.detail))]))
                .collect();
            Ok(Report {
                command: "selftest".into(),
                inputs: object([]),
                result: object([("criteria", Value::Array(rows))]),
                verdict: Verdict::from_bool(ok),
            })
        }
    }
}

fn bott(args: &BottArgs) -> Result<Report> {
    let space = &args.space;
    let w = &args.weight;
    let weight = |v: &Vec<i64>| GLWeight::new(v.clone());
    let (bundle, echo) = if let Some(v) = &w.sub_dual {
        (HomogeneousBundle::of_sub_dual(space, &weight(v)?)?, ("sub_dual", nums(v)))
    } else if let Some(v) = &w.sub {
        (HomogeneousBundle::of_sub(space, &weight(v)?)?, ("sub", nums(v)))
    } else if let Some(v) = &w.quot {
        (HomogeneousBundle::of_quot(space, &weight(v)?)?, ("quot", nums(v)))
    } else {
        let raw = w.blocks.as_deref().unwrap_or_default();
        let blocks = raw.split('|').map(|b| GLWeight::new(parse_ints(b).map_err(Error::InvalidArgument)?)).collect::<Result<Vec<_>>>()?;
        (HomogeneousBundle::new(space.clone(), blocks)?, ("blocks", json!(raw)))
    };
    let result = match flag_cohomology(&bundle)? {
        CohomologyResult::Zero => object([("kind", json!("ZERO"))]),
        CohomologyResult::Concentrated { degree, weight, dimension } => object([
            ("kind", json!("CONCENTRATED")),
            ("degree", num(degree)),
            ("weight", nums(weight.entries())),
            ("dimension", num(dimension)),
        ]),
    };
    Ok(Report {
        command: "bott".into(),
        inputs: object([("space", json!(space.to_string())), echo]),
        result,
        verdict: Verdict::NotApplicable,
    })
}

fn verify(target: &VerifyTarget) -> Result<Report> {
    let (name, mut inputs, collection, opts) = match target {
        VerifyTarget::Kapranov { d, n, sub, opts } => {
            let c = if *sub { kapranov_sub_collection(*d, *n)? } else { kapranov_collection(*d, *n)? };
            ("kapranov", vec![("d", num(d)), ("n", num(n)), ("sub", json!(sub))], c, opts)
        }
        VerifyTarget::Flag { steps, n, opts } => {
            let s = steps
                .iter()
                .map(|&x| usize::try_from(x).map_err(|_| Error::InvalidArgument(format!("negative step {x}"))))
                .collect::<Result<Vec<_>>>()?;
            ("flag", vec![("steps", nums(steps)), ("n", num(n))], flag_collection(&FlagSpace::new(s, *n)?)?, opts)
        }
        VerifyTarget::Beilinson { n, opts } => ("beilinson", vec![("n", num(n))], beilinson_collection(*n)?, opts),
        VerifyTarget::Wedge { d, n, opts } => ("wedge", vec![("d", num(d)), ("n", num(n))], wedge_collection(*d, *n)?, opts),
    };
    let collection = apply_opts(collection, opts, &mut inputs)?;
    let report = verify_tilting(&collection)?;
    Ok(Report {
        command: format!("verify {name}"),
        inputs: object(inputs),
        result: verification_json(&collection, &report),
        verdict: Verdict::from_bool(report.passed()),
    })
}

pub(crate) fn apply_opts(mut c: CollectionSpec, opts: &VerifyOpts, inputs: &mut Vec<(&'static str, Value)>) -> Result<CollectionSpec> {
    if opts.reverse {
        c = c.reversed();
        inputs.push(("reverse", json!(true)));
    }
    if let Some(t) = &opts.twist {
        let stages = c.space.steps().len();
        let twists = match t.len() {
            1 => vec![t[0]; stages],
            k if k == stages => t.clone(),
            k => return Err(Error::InvalidArgument(format!("{k} twists for {stages} stages"))),
        };
        c = c.twisted(&twists);
        inputs.push(("twist", nums(&twists)));
    }
    if let Some(m) = &opts.mult {
        let mults = m
            .iter()
            .map(|&x| {
                u64::try_from(x)
                    .ok()
                    .filter(|&x| x > 0)
                    .map(num_bigint::BigUint::from)
                    .ok_or_else(|| Error::InvalidArgument(format!("multiplicity {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        c = c.with_multiplicities(mults)?;
        inputs.push(("mult", nums(m)));
    }
    Ok(c)
}

fn violation_json(v: &Option<Violation>) -> Value {
    match v {
        None => Value::Null,
        Some(v) => {
            object([("kind", json!(v.kind.as_str())), ("i", num(v.i)), ("j", num(v.j)), ("degree", num(v.degree)), ("dim", num(&v.dim))])
        }
    }
}

pub fn verification_json(c: &CollectionSpec, r: &VerificationReport) -> Value {
    let higher: Vec<Value> =
        r.table.higher().map(|(&(i, j, s), d)| object([("i", num(i)), ("j", num(j)), ("degree", num(s)), ("dim", num(d))])).collect();
    object([
        ("space", json!(c.space.to_string())),
        (
            "kind",
            json!(match c.kind {
                CollectionKind::Exceptional => "exceptional",
                CollectionKind::TiltingSummands => "tilting_summands",
            }),
        ),
        ("labels", strs(&c.labels)),
        ("order_tag", json!(c.order_tag.as_str())),
        ("multiplicities", nums(&c.multiplicities)),
        ("is_tilting", json!(r.is_tilting)),
        ("is_exceptional_each", json!(r.is_exceptional_each)),
        ("is_strong_exceptional", json!(r.is_strong_exceptional)),
        ("triangularity_witness", r.triangularity_witness.map_or(Value::Null, |(i, j)| nums([i, j]))),
        ("hom_orientation", json!(r.hom_orientation.as_str())),
        ("first_violation", violation_json(&r.first_violation)),
        ("k0_rank", num(r.k0_rank)),
        ("end_algebra_dim", num(&r.end_algebra_dim)),
        ("hom_matrix", matrix(&r.table.hom_matrix())),
        ("higher_ext", Value::Array(higher)),
        ("generation", json!("granted by citation, not recomputed")),
    ])
}

fn descent(target: &DescentTarget) -> Result<Report> {
    let (name, inputs, summary) = match target {
        DescentTarget::Bs { algebra, range } => {
            let mut inputs = algebra.echo();
            if let Some(r) = range {
                inputs.push(("range", num(r)));
            }
            ("bs", inputs, bs_tilting_summary(&algebra.class()?, *range)?)
        }
        DescentTarget::Gbs { algebra, d } => {
            let mut inputs = algebra.echo();
            inputs.push(("d", num(d)));
            ("gbs", inputs, generalized_bs_summary(&algebra.class()?, *d)?)
        }
        DescentTarget::Tower { file } => {
            let text = read(file)?;
            ("tower", vec![("file", json!(file.display().to_string()))], twisted_tower_summary(&parse_tower(&text)?)?)
        }
    };
    Ok(Report {
        command: format!("descent {name}"),
        inputs: object(inputs),
        result: descent_json(&summary),
        verdict: Verdict::NotApplicable,
    })
}

pub fn descent_json(s: &DescentSummary) -> Value {
    object([
        ("labels", strs(&s.labels)),
        ("multiplicities", nums(&s.multiplicities)),
        ("ranks", nums(&s.ranks)),
        ("summand_count", num(s.summand_count())),
        ("total_rank", num(&s.total_rank)),
        ("end_dim", num(&s.end_dim)),
        ("split_summand_count", num(&s.split_summand_count)),
        ("notes", strs(&s.notes)),
    ])
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

fn fibration(target: &FibrationTarget) -> Result<Report> {
    let (name, file, plan, cap) = match target {
        FibrationTarget::Plan { file } => {
            let loaded = PlanFile::load(file)?;
            let plan = tower_at_twists(&loaded.stages, &loaded.twists, loaded.root)?;
            ("plan", file, plan, None)
        }
        FibrationTarget::Search { file, cap } => {
            let loaded = PlanFile::load(file)?;
            let cap = cap.unwrap_or(loaded.cap);
            ("search", file, tower_compose(&loaded.stages, loaded.root, cap)?, Some(cap))
        }
    };
    let mut inputs = vec![("file", json!(file.display().to_string()))];
    if let Some(c) = cap {
        inputs.push(("cap", num(c)));
    }
    Ok(Report {
        command: format!("fibration {name}"),
        inputs: object(inputs),
        result: plan_json(&plan),
        verdict: Verdict::from_bool(plan.verified),
    })
}

pub fn plan_json(p: &FibrationPlan) -> Value {
    let witness = match &p.witness {
        None => Value::Null,
        Some(v) => object([
            ("a", num(v.i)),
            ("b", num(v.j)),
            ("a_label", json!(p.labels[v.i])),
            ("b_label", json!(p.labels[v.j])),
            ("degree", num(v.degree)),
            ("dim", num(&v.dim)),
        ]),
    };
    object([
        ("stages", strs(p.stage_kinds())),
        ("twists", nums(p.stage_twists())),
        ("summand_count", num(p.summand_count())),
        ("labels", strs(&p.labels)),
        ("dim", num(p.dim)),
        ("verified", json!(p.verified)),
        ("witness", witness),
        ("higher_ext_count", num(p.ext_table.higher().count())),
        ("hom_matrix", matrix(&p.ext_table.hom_matrix())),
    ])
}
