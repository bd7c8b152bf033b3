use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rlkit::coann::coann_algebra;
use rlkit::hull::{build_hull, codensity, hull_lemma_report};
use rlkit::render::{all_tables, format_table, hasse_dot};
use rlkit::report::Report;
use rlkit::reticulation::{reticulate, verify_reticulation};
use rlkit::stone::{classify_stone, ClassifyOptions, Verdict};
use rlkit::suites::{run_suite, Suite, SuiteOptions};
use rlkit::{corpus, format, Algebra, Caps, Error, ResiduatedLattice};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "rlkit", version, about = "Reticulation, co-Stone classification and strongly co-Stone hulls of finite residuated lattices")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the Hasse diagram of the command's subject as DOT.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Cross-check the m-conditions on every nonempty subset.
    #[arg(long, global = true)]
    exhaustive_subsets: bool,
    /// Largest algebra any construction may materialise.
    #[arg(long, global = true, value_name = "N")]
    max_size: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the residuated-lattice axioms.
    Check { target: String },
    /// Build L(A) and verify the reticulation axioms.
    Reticulate { target: String },
    /// Co-Stone, strongly co-Stone and the five m-conditions.
    Classify { target: String },
    /// Build the strongly co-Stone hull.
    Hull { target: String },
    /// Run a verification suite on one algebra, or on every stored example.
    Verify {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
        target: Option<String>,
    },
    /// Browse the built-in corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Show { key: String },
}

/// A run's result before printing.
struct Outcome {
    algebra: Value,
    checks: Report,
    witnesses: BTreeMap<String, Value>,
    text: String,
    dot: Option<String>,
}

impl Outcome {
    fn new(algebra: Value) -> Outcome {
        Outcome { algebra, checks: Report::new(), witnesses: BTreeMap::new(), text: String::new(), dot: None }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Validation(inner) => Failure::Property(inner.to_string()),
            Error::LatticeAxiomViolation { .. }
            | Error::MonoidAxiomViolation { .. }
            | Error::ResiduationViolation { .. }
            | Error::OrderInconsistency { .. }
            | Error::NotDistributive { .. } => Failure::Property(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load(target: &str) -> Result<(String, ResiduatedLattice), Error> {
    match target.strip_prefix("corpus:") {
        Some(key) => Ok((key.to_string(), corpus::get(key)?)),
        None => {
            let alg = format::parse_file(target)?;
            let name = std::path::Path::new(target)
                .file_stem()
                .map_or_else(|| target.to_string(), |s| s.to_string_lossy().into_owned());
            Ok((name, alg))
        }
    }
}

fn describe<A: Algebra>(name: &str, alg: &A) -> Value {
    json!({ "name": name, "size": alg.size(), "labels": alg.labels() })
}

fn verdict_text(v: &Verdict) -> String {
    match &v.witness {
        Some(w) => format!("{} (witness {w})", v.holds),
        None => v.holds.to_string(),
    }
}

fn check(target: &str) -> Result<Outcome, Failure> {
    let (name, alg) = load(target)?;
    let mut out = Outcome::new(describe(&name, &alg));
    out.checks.push("residuated-lattice axioms", Ok(()));
    out.line(format!("valid residuated lattice ({} elements)", alg.size()));
    out.dot = Some(hasse_dot(&name, &alg));
    Ok(out)
}

fn reticulate_cmd(target: &str) -> Result<Outcome, Failure> {
    let (name, alg) = load(target)?;
    let ret = reticulate(&alg)?;
    let mut out = Outcome::new(describe(&name, &alg));
    out.checks = verify_reticulation(&alg, &ret.lattice, &ret.lambda);
    out.line(format!("L({name}) has {} elements", ret.lattice.size()));
    for (i, f) in ret.filters.iter().enumerate() {
        out.line(format!("  {} = {}", ret.lattice.label(i), f.display_with(alg.labels())));
    }
    let lambda: BTreeMap<String, String> =
        (0..alg.size()).map(|a| (alg.label(a).to_string(), ret.lattice.label(ret.lambda(a)).to_string())).collect();
    out.line("lambda:");
    for a in 0..alg.size() {
        out.line(format!("  {} -> {}", alg.label(a), ret.lattice.label(ret.lambda(a))));
    }
    out.witnesses.insert("lambda".into(), json!(lambda));
    out.witnesses.insert("lattice".into(), describe(&format!("L({name})"), &ret.lattice));
    out.text.push_str(&format_table("∨", ret.lattice.labels(), ret.lattice.join_table()));
    out.dot = Some(hasse_dot(&format!("L({name})"), &ret.lattice));
    Ok(out)
}

fn classify(target: &str, caps: &Caps, exhaustive: bool) -> Result<Outcome, Failure> {
    let (name, alg) = load(target)?;
    let opts = ClassifyOptions { exhaustive_subsets: exhaustive, reticulation_side: true };
    let s = classify_stone(&alg, caps, opts)?;
    let mut out = Outcome::new(describe(&name, &alg));
    out.line(format!("co-Stone: {}; Stone identity: {}", verdict_text(&s.co_stone), verdict_text(&s.stone_identity)));
    out.line(format!("strongly co-Stone: {}", verdict_text(&s.strongly_co_stone)));
    if let Some(v) = &s.reticulation_stone_identity {
        out.line(format!("Stone identity on L(A): {}", verdict_text(v)));
    }
    for (k, v) in s.m_conditions.verdicts() {
        out.line(format!("  ({k}) {}", verdict_text(v)));
    }
    out.line(format!("  note: {}", s.m_conditions.note));
    let agree = s.m_conditions.agree();
    out.checks.push_flag("(I)-(V) agree", agree, || format!("{:?}", s.m_conditions.flags()));
    out.checks.push_flag("strongly co-Stone implies co-Stone", !s.strongly_co_stone.holds || s.co_stone.holds, || name.clone());
    if let Some(v) = &s.m_conditions.exhaustive {
        out.checks.push_flag("subset scan agrees", v.holds, || v.witness.clone().unwrap_or_default());
    } else if exhaustive {
        out.line(format!("  subset scan skipped: {} elements exceeds {}", alg.size(), caps.exhaustive_subsets));
    }
    out.witnesses.insert("classification".into(), serde_json::to_value(&s).expect("serializable"));
    let coann = coann_algebra(&alg, caps)?;
    out.dot = Some(hasse_dot(&format!("CoAnn({name})"), &coann.lattice));
    Ok(out)
}

fn hull_cmd(target: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let (name, alg) = load(target)?;
    let hull = build_hull(&alg, caps)?;
    let h = hull.algebra();
    let mut out = Outcome::new(describe(&name, &alg));
    out.checks = hull_lemma_report(&hull, caps)?;
    out.line(format!(
        "{}-element hull over {} partition(s) of CoAnn({name}) ({} members)",
        h.size(),
        hull.partitions.len(),
        hull.base().len()
    ));
    out.line("epsilon:");
    for a in 0..alg.size() {
        out.line(format!("  {} -> {}", alg.label(a), h.label(hull.epsilon(a))));
    }
    let cd = codensity(&hull);
    out.line(format!("co-dense: {}", cd.holds));
    let strongly = out.checks.get("hull is strongly co-Stone").is_some_and(|c| c.passed);
    out.line(format!("strongly co-Stone: {strongly}"));
    out.text.push_str(&all_tables(h));
    let eps: BTreeMap<String, String> =
        (0..alg.size()).map(|a| (alg.label(a).to_string(), h.label(hull.epsilon(a)).to_string())).collect();
    out.witnesses.insert("epsilon".into(), json!(eps));
    let cod: BTreeMap<String, Option<String>> = cd
        .witnesses
        .iter()
        .enumerate()
        .filter(|&(x, _)| x != h.top())
        .map(|(x, w)| (h.label(x).to_string(), w.map(|y| alg.label(y).to_string())))
        .collect();
    out.witnesses.insert("codensity".into(), json!(cod));
    out.witnesses.insert("hull".into(), describe(&format!("hull({name})"), h));
    out.dot = Some(hasse_dot(&format!("hull({name})"), h));
    Ok(out)
}

fn verify(suite: &str, target: Option<&str>, caps: &Caps, exhaustive: bool) -> Result<Outcome, Failure> {
    let suite: Suite = suite.parse()?;
    let opts = SuiteOptions { exhaustive_subsets: exhaustive };
    let targets: Vec<String> = match target {
        Some(t) => vec![t.to_string()],
        None => corpus::EXAMPLE_KEYS.iter().map(|k| format!("corpus:{k}")).collect(),
    };
    let mut names = Vec::new();
    let mut checks = Report::new();
    let mut dot = None;
    for t in &targets {
        let (name, alg) = load(t)?;
        let r = run_suite(suite, &alg, caps, opts)?;
        if dot.is_none() {
            dot = Some(hasse_dot(&name, &alg));
        }
        checks.extend(&name, r);
        names.push(name);
    }
    let mut out = Outcome::new(json!({ "suite": suite.name(), "targets": names }));
    let passed = checks.checks.iter().filter(|c| c.passed).count();
    out.text.push_str(&checks.to_string());
    out.line(format!("{suite}: {passed}/{} checks passed", checks.len()));
    out.checks = checks;
    out.dot = dot;
    Ok(out)
}

fn corpus_cmd(action: &CorpusAction) -> Result<Outcome, Failure> {
    match action {
        CorpusAction::List => {
            let mut out = Outcome::new(json!({ "name": "corpus" }));
            let entries = corpus::list();
            let w = entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, d) in &entries {
                out.line(format!("{k:w$}  {d}"));
            }
            out.witnesses.insert("entries".into(), json!(entries.into_iter().collect::<BTreeMap<_, _>>()));
            Ok(out)
        }
        CorpusAction::Show { key } => {
            let alg = corpus::get(key)?;
            let mut out = Outcome::new(describe(key, &alg));
            if let Ok(e) = corpus::entry(key) {
                out.text.push_str(e.text);
                if !e.text.ends_with('\n') {
                    out.text.push('\n');
                }
            }
            out.text.push_str(&all_tables(&alg));
            out.dot = Some(hasse_dot(key, &alg));
            Ok(out)
        }
    }
}

fn emit(out: &Outcome, json_mode: bool) {
    if json_mode {
        let witnesses: BTreeMap<&String, &Value> = out.witnesses.iter().collect();
        let doc = json!({ "algebra": out.algebra, "checks": out.checks.checks, "witnesses": witnesses });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return;
    }
    print!("{}", out.text);
    for c in out.checks.failures() {
        println!("{c}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::default();
    if let Some(m) = cli.max_size {
        caps.product = m;
    }
    let result = match &cli.command {
        Command::Check { target } => check(target),
        Command::Reticulate { target } => reticulate_cmd(target),
        Command::Classify { target } => classify(target, &caps, cli.exhaustive_subsets),
        Command::Hull { target } => hull_cmd(target, &caps),
        Command::Verify { suite, target } => verify(suite, target.as_deref(), &caps, cli.exhaustive_subsets),
        Command::Corpus { action } => corpus_cmd(action),
    };
    match result {
        Ok(out) => {
            if let (Some(path), Some(dot)) = (&cli.dot, &out.dot) {
                if let Err(e) = fs::write(path, dot) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            emit(&out, cli.json);
            if out.checks.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Property(w)) => {
            if cli.json {
                let doc = json!({ "algebra": Value::Null, "checks": [{ "name": "residuated-lattice axioms", "passed": false, "witness": w }], "witnesses": {} });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                println!("FAIL  {w}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
