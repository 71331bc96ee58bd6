//! `teamklm`: model checking, preferential entailment and property checks
//! for dependence logic on teams.
//!
//! Exit status: 0 when the queried statement holds, 1 when it fails, 2 on
//! usage or validation errors.

mod out;
mod repro;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use teamklm::circuits::{build_lex_circuit, print_netlist, Strictness, Variant};
use teamklm::prefmodel::{parse_model, w_circ_star, w_pq, w_sub, w_sup};
use teamklm::properties::{
    check_star, check_star_corpus, check_system_c, check_system_p, check_triangle, or_counterexample,
    Corpus, CorpusParams, CorpusTable,
};
use teamklm::succinct::{load_succinct, succ_entails_generic, succ_entails_rlex, SuccinctModel};
use teamklm::teams::models_of;
use teamklm::{Domain, Formula, Limits, PreferentialModel, Team};

use out::{Format, Out};

#[derive(Parser)]
#[command(name = "teamklm", version, about = "Preferential entailment over dependence logic on teams")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(flatten)]
    guards: Guards,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Guards {
    /// Largest variable set for exhaustive team enumeration.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    /// Largest explicit model.
    #[arg(long, global = true)]
    max_states: Option<usize>,
    #[arg(long, global = true)]
    max_team_size: Option<usize>,
    #[arg(long, global = true)]
    max_sat_vars: Option<usize>,
    /// Largest state width for expanding succinct models.
    #[arg(long, global = true)]
    max_expand_bits: Option<usize>,
    #[arg(long, global = true)]
    max_state_bits: Option<usize>,
}

impl Guards {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut l.max_vars, self.max_vars);
        set(&mut l.max_states, self.max_states);
        set(&mut l.max_team_size, self.max_team_size);
        set(&mut l.max_sat_vars, self.max_sat_vars);
        set(&mut l.max_expand_bits, self.max_expand_bits);
        if let Some(b) = self.max_state_bits {
            l.max_classical_state_bits = b;
            l.max_team_state_bits = b;
        }
        l
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Model-check a team against a formula.
    Mc {
        #[arg(long, num_args = 1.., required = true)]
        vars: Vec<String>,
        /// Team literal such as `100,010`, or `-` for the empty team.
        #[arg(long, conflicts_with = "team_file")]
        team: Option<String>,
        /// File holding a team literal.
        #[arg(long)]
        team_file: Option<PathBuf>,
        #[arg(long)]
        formula: String,
    },
    /// List every team model of a formula.
    Models {
        #[arg(long, num_args = 1.., required = true)]
        vars: Vec<String>,
        #[arg(long)]
        formula: String,
    },
    /// Preferential entailment on an explicit model file.
    Entail {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Also list the minimal premise states.
        #[arg(long)]
        verbose: bool,
    },
    /// Preferential entailment on a circuit-represented model.
    SuccEntail {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t = Algo::Generic)]
        algo: Algo,
    },
    /// Check a structural property or rule system on a model file.
    Verify {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Require preferred proper-subteam states to be nonempty.
        #[arg(long)]
        strict: bool,
        /// Check a single pair instead of a corpus (star only).
        #[arg(long, requires = "rhs")]
        lhs: Option<String>,
        #[arg(long, requires = "lhs")]
        rhs: Option<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Build an Or violation from a subteam-preference failure.
    CounterexampleOr {
        #[arg(long)]
        model: PathBuf,
    },
    /// Write a canonical model file.
    Canon {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, num_args = 1..)]
        vars: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a lexicographic comparison netlist.
    GenLex {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Lex)]
        variant: VariantArg,
        /// Strict comparison; the default is the nonstrict one.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a worked example end to end.
    Repro {
        #[arg(long, value_enum)]
        example: repro::Example,
    },
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra random formulas.
    #[arg(long, default_value_t = 0)]
    random: usize,
    /// Leave out the subteam-defining formulas.
    #[arg(long)]
    no_theta: bool,
    /// Leave out dependence atoms.
    #[arg(long)]
    no_dep: bool,
}

impl CorpusArgs {
    fn params(&self) -> CorpusParams {
        CorpusParams {
            depth: self.depth,
            seed: self.seed,
            random: self.random,
            include_theta: !self.no_theta,
            include_dep: !self.no_dep,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Generic,
    Rlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Triangle,
    Star,
    SystemC,
    SystemP,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sub,
    Sup,
    Pq,
    Circstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Lex,
    Rlex,
}

fn formula(s: &str) -> anyhow::Result<Formula> {
    s.parse().with_context(|| format!("cannot parse formula `{s}`"))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_model(path: &Path, limits: &Limits) -> anyhow::Result<PreferentialModel> {
    parse_model(&read(path)?, limits).with_context(|| format!("invalid model file {}", path.display()))
}

fn write_or_print(out: &mut Out, text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display()))?;
            out.result("WRITTEN", &format!("wrote {}", p.display()));
        }
        None => out.raw(text),
    }
    Ok(())
}

fn run(cli: Cli, out: &mut Out) -> anyhow::Result<bool> {
    let limits = cli.guards.limits();
    match cli.cmd {
        Cmd::Mc { vars, team, team_file, formula: f } => {
            let d = Domain::new(vars)?;
            let lit = match (team, team_file) {
                (Some(t), _) => t,
                (None, Some(p)) => read(&p)?.trim().to_string(),
                (None, None) => bail!("one of --team or --team-file is required"),
            };
            let t = Team::parse(&d, &lit)?;
            let f = formula(&f)?;
            d.check_vars(&f)?;
            let sat = teamklm::teams::eval_team_with(&t, &f, &limits)?;
            let word = if sat { "SAT" } else { "UNSAT" };
            out.result(word, &format!("{word}: team {t} {} {f}", if sat { "satisfies" } else { "does not satisfy" }));
            Ok(sat)
        }
        Cmd::Models { vars, formula: f } => {
            let d = Domain::new(vars)?;
            let models = models_of(&formula(&f)?, &d, &limits)?;
            out.result(&format!("{} MODELS", models.len()), &format!("{} team models", models.len()));
            for t in models.teams() {
                out.witness(&t.to_string());
            }
            Ok(true)
        }
        Cmd::Entail { model, lhs, rhs, verbose } => {
            let w = load_model(&model, &limits)?;
            let v = w.entails(&formula(&lhs)?, &formula(&rhs)?)?;
            if v.holds {
                out.result("ENTAILS", &format!("{lhs} |~ {rhs}"));
            } else {
                out.result("NOT-ENTAILS", &format!("{lhs} does not entail {rhs}"));
                let s = v.witness.expect("failing verdict has a witness");
                out.witness(&format!("{} = {}", w.name(s), w.label(s)));
            }
            if verbose {
                let names: Vec<&str> = v.minimal_states.iter().map(|&s| w.name(s)).collect();
                out.witness(&format!("minimal {}", names.join(" ")));
            }
            Ok(v.holds)
        }
        Cmd::SuccEntail { model, lhs, rhs, algo } => {
            let m: SuccinctModel = load_succinct(&model)?;
            let (phi, psi) = (formula(&lhs)?, formula(&rhs)?);
            let v = match algo {
                Algo::Generic => {
                    if m.m() <= limits.max_expand_bits {
                        m.expand(&limits)?;
                    } else {
                        out.note("order not validated: state space above the expansion guard");
                    }
                    succ_entails_generic(&m, &phi, &psi, &limits)?
                }
                Algo::Rlex => {
                    let v = succ_entails_rlex(&m, &phi, &psi, &limits)?;
                    out.note(&format!("{} oracle calls", v.oracle_calls));
                    v
                }
            };
            if v.holds {
                out.result("ENTAILS", &format!("{lhs} |~ {rhs}"));
            } else {
                out.result("NOT-ENTAILS", &format!("{lhs} does not entail {rhs}"));
                out.witness(&m.state_name(v.witness.expect("failing verdict has a witness")));
            }
            Ok(v.holds)
        }
        Cmd::Verify { model, property, strict, lhs, rhs, corpus } => {
            let w = load_model(&model, &limits)?;
            let table = || -> anyhow::Result<CorpusTable> {
                let c = Corpus::generate(w.domain(), corpus.params())?;
                Ok(CorpusTable::new(&c, &limits)?)
            };
            let report = match property {
                PropertyArg::Triangle => check_triangle(&w, strict),
                PropertyArg::Star => match (lhs, rhs) {
                    (Some(a), Some(b)) => check_star(&w, &formula(&a)?, &formula(&b)?)?,
                    _ => check_star_corpus(&w, &table()?)?,
                },
                PropertyArg::SystemC => check_system_c(&w, &table()?)?,
                PropertyArg::SystemP => check_system_p(&w, &table()?)?,
            };
            let line = report.to_string();
            out.result(&line, &line);
            Ok(report.holds)
        }
        Cmd::CounterexampleOr { model } => {
            let w = load_model(&model, &limits)?;
            match or_counterexample(&w)? {
                Some(v) => {
                    out.result("FOUND", "Or violation found");
                    out.witness(&format!("state {} = {}", w.name(v.state), w.label(v.state)));
                    out.witness(&format!("phi={}", v.phi));
                    out.witness(&format!("psi={}", v.psi));
                    out.witness(&format!("gamma={}", v.gamma));
                    Ok(true)
                }
                None => {
                    out.result("NONE", "no Or violation: every multi-member state has a preferred proper subteam");
                    Ok(false)
                }
            }
        }
        Cmd::Canon { kind, vars, out: path } => {
            let w = match kind {
                Kind::Pq => w_pq(),
                Kind::Circstar => w_circ_star(),
                Kind::Sub | Kind::Sup => {
                    if vars.is_empty() {
                        bail!("--vars is required for this kind");
                    }
                    let d = Domain::new(vars)?;
                    if matches!(kind, Kind::Sub) {
                        w_sub(&d, &limits)?
                    } else {
                        w_sup(&d, &limits)?
                    }
                }
            };
            write_or_print(out, &w.to_model_file(), path.as_deref())?;
            Ok(true)
        }
        Cmd::GenLex { n, variant, strict, out: path } => {
            if n == 0 {
                bail!("--n must be positive");
            }
            let variant = match variant {
                VariantArg::Lex => Variant::Lex,
                VariantArg::Rlex => Variant::Rlex,
            };
            let strictness = if strict { Strictness::Strict } else { Strictness::Nonstrict };
            write_or_print(out, &print_netlist(&build_lex_circuit(n, variant, strictness)), path.as_deref())?;
            Ok(true)
        }
        Cmd::Repro { example } => {
            let ok = repro::run(example, out)?;
            out.result(if ok { "PASS" } else { "FAIL" }, if ok { "all checks passed" } else { "some checks failed" });
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.format);
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
