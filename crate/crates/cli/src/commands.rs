use crate::report::Report;
use crate::{CodeArgs, CurveArgs, LbasisArgs, PipelineArgs, SelftestArgs, SemigroupArgs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use weierstrass_core::approx_roots::{am_properties, analyze_curve, CurveAnalysis};
use weierstrass_core::branch::{parametrize, BranchParam};
use weierstrass_core::checks;
use weierstrass_core::codes::{build_code, CodeSpec, EvaluationSet};
use weierstrass_core::parse::{parse_element, parse_poly};
use weierstrass_core::semigroup::{NumericalSemigroup, TelescopicStructure};
use weierstrass_core::weierstrass::{
    parse_integral_basis, triangulate, FunctionTable, Provenance, TriangulationMode, TriangulationReport,
};
use weierstrass_core::{Error, FiniteField};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    /// Self-test found violations; the report is still printed.
    Violations(Box<Report>, usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Violations(_, n) => write!(f, "{n} invariant violations"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => e.class().exit_code() as u8,
            CliError::Io(_) => 1,
            CliError::Violations(..) => 3,
        }
    }
}

impl fmt::Debug for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Report")
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Fast,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SemigroupAction {
    Stats,
    Apery,
    Nu,
    Fengrao,
    Symmetric,
    Q0,
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_curve(args: &CurveArgs) -> Result<(FiniteField, CurveAnalysis)> {
    let field = FiniteField::parse(&args.field)?;
    let text = match (&args.curve, &args.curve_file) {
        (Some(c), _) => c.clone(),
        (None, Some(p)) => read(p)?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join(" "),
        (None, None) => return Err(Error::InvalidArgument("no curve given".into()).into()),
    };
    let poly = parse_poly(&field, &text)?;
    Ok((field, analyze_curve(&poly)?))
}

pub fn curve_analyze(args: &CurveArgs) -> Result<Report> {
    let (field, a) = load_curve(args)?;
    let seq = &a.sequence;
    let mut r = Report::new();
    r.field("field", &field)
        .field("curve", a.model.original())
        .field("substitution", a.model.substitution().map_or("none".into(), |k| format!("X <- X + Y^{k}")))
        .field("model", a.model.equation())
        .field("m", a.model.m())
        .field("n", a.model.n())
        .field("e_P", a.model.multiplicity_at_infinity())
        .field("h", seq.h)
        .field("delta", join(&seq.delta, ","))
        .field("d", join(&seq.d, ","))
        .field("n_i", join(&seq.nseq, ","));
    let props = am_properties(seq);
    r.field("gcd chain (I)", yes_no(props.gcd_chain))
        .field("membership (II)", yes_no(props.membership))
        .field("decreasing (III)", yes_no(props.decreasing))
        .field("one branch", &a.verdict);
    if let Some(sp) = &a.semigroup {
        let s = sp.semigroup();
        r.field("S_P", format!("<{}>", join(sp.generators(), ",")))
            .field("genus of S_P", s.genus())
            .field("conductor of S_P", s.conductor());
    }
    let rows = seq.roots.iter().enumerate().map(|(i, f)| vec![i.to_string(), f.to_string()]).collect();
    r.table("approximate roots", &["i", "F_i"], rows);
    Ok(r)
}

struct Pipeline {
    analysis: CurveAnalysis,
    oracle: BranchParam,
    report: TriangulationReport,
    table: FunctionTable,
}

fn pipeline(args: &PipelineArgs) -> Result<Pipeline> {
    let (field, analysis) = load_curve(&args.curve)?;
    let Some(sp) = analysis.semigroup.clone() else {
        return Err(Error::NotOneBranch(analysis.verdict.to_string()).into());
    };
    let mut oracle = parametrize(&analysis.model, args.precision)?;
    let basis = match &args.integral_basis {
        Some(p) => parse_integral_basis(&field, &read(p)?)?,
        None => Vec::new(),
    };
    let mode = match args.mode {
        Mode::Fast => TriangulationMode::Fast,
        Mode::Plain => TriangulationMode::Plain,
    };
    let (report, table) = triangulate(&sp, &basis, &mut oracle, mode)?;
    Ok(Pipeline { analysis, oracle, report, table })
}

pub fn weierstrass(args: &PipelineArgs) -> Result<Report> {
    let p = pipeline(args)?;
    let rep = &p.report;
    let mut r = Report::new();
    r.field("model", p.analysis.model.equation())
        .field("S_P", format!("<{}>", join(p.analysis.semigroup.as_ref().unwrap().generators(), ",")))
        .field("genus of S_P", rep.s_p.genus())
        .field("s", rep.basis_size)
        .field("escaped values", join(&rep.escaped_values, ","))
        .field("added values", join(&rep.added_values, ","))
        .field("Gamma_P gaps", join(&rep.gamma.gaps(), ","))
        .field("Gamma_P Apery", join(rep.gamma.apery(), ","))
        .field("conductor", rep.gamma.conductor())
        .field("genus", rep.genus);
    let rows = rep
        .reductions
        .iter()
        .map(|red| {
            vec![
                (red.index + 1).to_string(),
                join(&red.trajectory, ">"),
                red.result.as_ref().map_or("-".into(), |g| g.value.to_string()),
                red.result.as_ref().map_or("-".into(), |g| g.function.to_string()),
            ]
        })
        .collect();
    r.table("reductions", &["i", "trajectory", "value", "g_i"], rows);
    Ok(r)
}

fn provenance(p: &Provenance) -> String {
    match p {
        Provenance::AmProduct => "am".into(),
        Provenance::IntegralBasis(i) => format!("basis {}", i + 1),
        Provenance::Product => "product".into(),
    }
}

pub fn lbasis(args: &LbasisArgs) -> Result<Report> {
    let mut p = pipeline(&args.pipeline)?;
    let basis = p.table.l_basis(args.m, &mut p.oracle)?;
    let mut r = Report::new();
    r.field("m", args.m).field("dimension", basis.len()).field("genus", p.report.genus);
    let rows = basis
        .iter()
        .map(|f| vec![f.value.to_string(), provenance(&f.provenance), f.function.to_string()])
        .collect();
    r.table("L(mP) basis", &["value", "source", "function"], rows);
    Ok(r)
}

fn code_setup(args: &CodeArgs) -> Result<(Pipeline, EvaluationSet)> {
    let p = pipeline(&args.pipeline)?;
    let base = p.analysis.model.field();
    let ext = FiniteField::new(base.characteristic(), base.degree() * args.ext)?;
    let points = EvaluationSet::for_table(&p.table, &ext)?;
    Ok((p, points))
}

fn code_fields(r: &mut Report, c: &CodeSpec) {
    r.field("field", &c.field)
        .field("n", c.n)
        .field("m", c.m)
        .field("rank", c.rank)
        .field("k", c.k)
        .field("d_star", c.goppa)
        .field("m_prime", c.m_prime)
        .field("delta_FR", c.feng_rao)
        .field("t_corr", c.feng_rao.saturating_sub(1) / 2)
        .field("improved", yes_no(c.improved));
}

pub fn code_build(args: &CodeArgs, m: u64) -> Result<Report> {
    let (p, points) = code_setup(args)?;
    let code = build_code(&p.table, &points, m, args.improved)?;
    let f = points.field();
    let mut r = Report::new();
    code_fields(&mut r, &code);
    let rows = points
        .points()
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| vec![format!("P{}", i + 1), f.format(x), f.format(y)])
        .collect();
    r.table("points", &["point", "x", "y"], rows);
    let headers: Vec<String> =
        std::iter::once("r".to_string()).chain((1..=code.n).map(|i| format!("P{i}"))).collect();
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    let rows = code
        .row_values
        .iter()
        .zip(&code.matrix)
        .map(|(v, row)| std::iter::once(v.to_string()).chain(row.iter().map(|&e| f.format(e))).collect())
        .collect();
    r.table("parity-check matrix", &header_refs, rows);
    Ok(r)
}

pub fn code_bounds(args: &CodeArgs, from: u64, to: Option<u64>) -> Result<Report> {
    let (p, points) = code_setup(args)?;
    let g = p.report.genus;
    let to = to.unwrap_or(points.len() as u64 + 2 * g);
    let mut rows = Vec::new();
    for m in from..=to {
        let c = build_code(&p.table, &points, m, args.improved)?;
        rows.push(vec![
            m.to_string(),
            c.k.to_string(),
            c.goppa.to_string(),
            c.feng_rao.to_string(),
            (c.feng_rao.saturating_sub(1) / 2).to_string(),
        ]);
    }
    let mut r = Report::new();
    r.field("field", points.field()).field("n", points.len()).field("genus", g);
    r.table("bounds", &["m", "k", "d_star", "delta_FR", "t_corr"], rows);
    Ok(r)
}

pub fn code_syndrome(args: &CodeArgs, m: u64, word: &str, bidimensional: bool) -> Result<Report> {
    let (p, points) = code_setup(args)?;
    let code = build_code(&p.table, &points, m, args.improved)?;
    let f = points.field();
    let y = word.split(',').map(|s| parse_element(f, s.trim())).collect::<std::result::Result<Vec<_>, _>>()?;
    let syn = code.known_syndromes(&y)?;
    let mut r = Report::new();
    r.field("n", code.n).field("m", m).field("codeword", yes_no(syn.iter().all(|&s| s == 0)));
    let rows = code.row_values.iter().zip(&syn).map(|(v, &s)| vec![v.to_string(), f.format(s)]).collect();
    r.table("known syndromes", &["r", "s_r"], rows);
    if bidimensional {
        let s2 = code.bidimensional_syndromes(&y)?;
        let headers: Vec<String> =
            std::iter::once("a\\b".to_string()).chain(code.row_values.iter().map(|v| v.to_string())).collect();
        let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
        let rows = code
            .row_values
            .iter()
            .zip(&s2)
            .map(|(v, row)| std::iter::once(v.to_string()).chain(row.iter().map(|&e| f.format(e))).collect())
            .collect();
        r.table("bidimensional syndromes", &header_refs, rows);
    }
    Ok(r)
}

fn parse_gens(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .ok()
                .filter(|&g| g > 0)
                .ok_or_else(|| Error::Parse(format!("bad generator `{s}`")).into())
        })
        .collect()
}

pub fn semigroup(args: &SemigroupArgs) -> Result<Report> {
    let gens = parse_gens(&args.gens)?;
    let s = match args.pivot {
        Some(e) => NumericalSemigroup::with_pivot(&gens, e)?,
        None => NumericalSemigroup::from_generators(&gens)?,
    };
    let range = |lo: u64, hi: u64| -> Vec<u64> {
        match args.m {
            Some(m) => vec![m],
            None => (args.from.unwrap_or(lo)..=args.to.unwrap_or(hi)).collect(),
        }
    };
    let mut r = Report::new();
    let (g, c, e) = (s.genus(), s.conductor(), s.pivot());
    match args.action {
        SemigroupAction::Stats => {
            r.field("semigroup", &s)
                .field("pivot", e)
                .field("multiplicity", s.multiplicity())
                .field("genus", g)
                .field("conductor", c)
                .field("last gap", s.last_gap())
                .field("max index", s.max_index())
                .field("symmetric", yes_no(s.is_symmetric()))
                .field("gaps", join(&s.gaps(), ","));
        }
        SemigroupAction::Apery => {
            r.field("semigroup", &s).field("pivot", e);
            let rows = s.apery().iter().enumerate().map(|(i, a)| vec![i.to_string(), a.to_string()]).collect();
            r.table("Apery set", &["i", "a_i"], rows);
        }
        SemigroupAction::Nu => {
            let mut rows = Vec::new();
            for m in range(0, c + e) {
                if s.contains(m) {
                    let co = s.coordinates(m).unwrap();
                    rows.push(vec![m.to_string(), co.i.to_string(), co.l.to_string(), s.nu(m)?.to_string()]);
                } else if args.m.is_some() {
                    return Err(Error::NotInSemigroup(m).into());
                }
            }
            r.field("semigroup", &s);
            r.table("nu", &["m", "i", "l", "nu"], rows);
        }
        SemigroupAction::Fengrao => {
            let mut rows = Vec::new();
            for m in range(c, (4 * g).max(c)) {
                if !s.contains(m) {
                    if args.m.is_some() {
                        return Err(Error::NotInSemigroup(m).into());
                    }
                    continue;
                }
                let fast = s.is_symmetric() && g > 0 && m >= c && m + 2 <= 2 * c;
                let fr = if fast { s.feng_rao_symmetric(m)? } else { s.feng_rao(m)? };
                let goppa = s.goppa_bound(m);
                rows.push(vec![
                    m.to_string(),
                    s.nu(m)?.to_string(),
                    fr.to_string(),
                    goppa.to_string(),
                    (fr as i64 - goppa).to_string(),
                    yes_no(fast).to_string(),
                    yes_no(s.min_formula_holds(m)?).to_string(),
                ]);
            }
            r.field("semigroup", &s).field("genus", g).field("conductor", c);
            r.table(
                "Feng-Rao distances",
                &["m", "nu", "delta_FR", "d_star", "gain", "symmetric_path", "min_formula"],
                rows,
            );
        }
        SemigroupAction::Symmetric => {
            r.field("semigroup", &s)
                .field("symmetric", yes_no(s.is_symmetric()))
                .field("conductor", c)
                .field("2g", 2 * g);
        }
        SemigroupAction::Q0 => {
            let q = s.q0_m0()?;
            r.field("semigroup", &s)
                .field("conductor", c)
                .field("genus", g)
                .field("q0", q.q0)
                .field("m0", q.m0)
                .field("q0 >= e0+2", yes_no(q.above_bound))
                .field("formula holds from", s.min_formula_threshold());
        }
    }
    Ok(r)
}

fn random_semigroup(rng: &mut ChaCha8Rng) -> NumericalSemigroup {
    loop {
        let e = rng.gen_range(2..=12u64);
        let mut gens = vec![e];
        gens.extend((0..rng.gen_range(1..=4)).map(|_| rng.gen_range(e + 1..4 * e)));
        if let Ok(s) = NumericalSemigroup::from_generators(&gens) {
            if s.genus() <= 25 {
                return s;
            }
        }
    }
}

fn random_telescopic(rng: &mut ChaCha8Rng) -> TelescopicStructure {
    loop {
        let n: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(2..=4)).collect();
        let mut gens = vec![n.iter().product::<u64>()];
        for (k, &nk) in n.iter().enumerate() {
            let d = gens[0] / n[..=k].iter().product::<u64>();
            let prev = if k == 0 { 0 } else { n[k - 1] * gens[k] };
            let mut u = prev / d + rng.gen_range(1..6);
            while gcd(u, nk) != 1 {
                u += 1;
            }
            gens.push(d * u);
        }
        if let Ok(t) = TelescopicStructure::new(&gens) {
            return t;
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn selftest(args: &SelftestArgs) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut rows = Vec::new();
    let mut all = Vec::new();
    let mut suite = |name: &str, cases: usize, bad: Vec<String>| {
        rows.push(vec![name.to_string(), cases.to_string(), bad.len().to_string()]);
        all.extend(bad);
    };
    let semigroups: Vec<_> = (0..args.count).map(|_| random_semigroup(&mut rng)).collect();
    suite("oracle equivalence", semigroups.len(), semigroups.iter().flat_map(checks::semigroup_oracles).collect());
    let symmetric = semigroups.iter().filter(|s| s.is_symmetric()).count();
    suite("symmetric", symmetric, semigroups.iter().flat_map(checks::symmetric_suite).collect());
    let tele: Vec<_> = (0..20).map(|_| random_telescopic(&mut rng)).collect();
    suite("telescopic", tele.len(), tele.iter().flat_map(checks::telescopic_suite).collect());
    let adjoins: Vec<_> = (0..50).map(|_| (random_semigroup(&mut rng), rng.gen_range(1..80))).collect();
    suite("adjoin", adjoins.len(), adjoins.iter().flat_map(|(s, b)| checks::adjoin_check(s, *b)).collect());
    let mut r = Report::new();
    r.field("seed", args.seed);
    r.table("suites", &["suite", "cases", "violations"], rows);
    if all.is_empty() {
        Ok(r)
    } else {
        let n = all.len();
        r.table("violations", &["detail"], all.into_iter().map(|v| vec![v]).collect());
        Err(CliError::Violations(Box::new(r), n))
    }
}
