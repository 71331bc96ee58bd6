//! Worked examples replayed end to end. Each prints a transcript and
//! reports whether every expectation held.

use clap::ValueEnum;

use teamklm::circuits::{build_lex_circuit, Strictness, Variant};
use teamklm::prefmodel::{w_circ_star, w_pq, w_sub};
use teamklm::properties::{
    check_star, check_system_p, check_triangle, or_counterexample, Corpus, CorpusParams, CorpusTable,
};
use teamklm::succinct::{olms, olms_reduction, succ_entails_generic, succ_entails_rlex};
use teamklm::teams::{entails_classical, eval_team};
use teamklm::{Domain, Formula, Limits, Team};

use crate::out::Out;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// Dependence and constancy atoms on the team {100, 010}.
    DepAtoms,
    /// The two-variable model whose entailment breaks Or.
    ViolateOr,
    /// The three-state model over {p}.
    TplStar,
    /// Subteam-ordered models reduce to classical consequence.
    Reconstruction,
    /// Lexicographic comparison circuits.
    LexCircuit,
    /// Lexicographically largest models through the succinct reduction.
    OlmsReduction,
    All,
}

struct Checks<'o> {
    out: &'o mut Out,
    ok: bool,
}

impl Checks<'_> {
    fn expect(&mut self, what: &str, got: bool, want: bool) {
        let mark = if got == want { "ok  " } else { "FAIL" };
        self.ok &= got == want;
        self.out.line(&format!("  [{mark}] {what}: {got} (expected {want})"));
    }
}

fn f(s: &str) -> Formula {
    s.parse().expect("static formula")
}

pub fn run(example: Example, out: &mut Out) -> anyhow::Result<bool> {
    let mut c = Checks { out, ok: true };
    let all = example == Example::All;
    if all || example == Example::DepAtoms {
        dep_atoms(&mut c)?;
    }
    if all || example == Example::ViolateOr {
        violate_or(&mut c)?;
    }
    if all || example == Example::TplStar {
        tpl_star(&mut c)?;
    }
    if all || example == Example::Reconstruction {
        reconstruction(&mut c)?;
    }
    if all || example == Example::LexCircuit {
        lex_circuit(&mut c)?;
    }
    if all || example == Example::OlmsReduction {
        olms_example(&mut c)?;
    }
    Ok(c.ok)
}

fn dep_atoms(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("dep-atoms: team {100, 010} over p q r");
    let d = Domain::new(["p", "q", "r"])?;
    let t = Team::parse(&d, "100,010")?;
    for (g, want) in [("dep(p;q)", true), ("dep(r)", true), ("dep(p) | dep(p)", true), ("dep(p)", false)] {
        c.expect(&format!("X satisfies {}", f(g)), eval_team(&t, &f(g))?, want);
    }
    Ok(())
}

fn violate_or(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("violate-or: the model over p q with {00,11} globally preferred");
    let w = w_pq();
    for (a, b, want) in [("p", "q", true), ("~p", "q", true), ("p | ~p", "q", false)] {
        c.expect(&format!("{} |~ {}", f(a), f(b)), w.entails(&f(a), &f(b))?.holds, want);
    }
    let table = CorpusTable::new(&Corpus::generate(w.domain(), CorpusParams::default())?, w.limits())?;
    let r = check_system_p(&w, &table)?;
    c.out.line(&format!("  {r}"));
    c.expect("System P holds", r.holds, false);
    c.expect("subteam preference holds", check_triangle(&w, false).holds, false);
    c.expect("star holds for p, ~p", check_star(&w, &f("p"), &f("~p"))?.holds, false);
    Ok(())
}

fn tpl_star(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("tpl-star: states {1}, {0}, {0,1} with {0,1} preferred to both");
    let w = w_circ_star();
    let tri = check_triangle(&w, false);
    c.out.line(&format!("  {tri}"));
    c.expect("subteam preference holds", tri.holds, false);
    let star = check_star(&w, &f("p"), &f("~p"))?;
    c.out.line(&format!("  {star}"));
    c.expect("star holds for p, ~p", star.holds, false);
    let pl = CorpusParams { include_dep: false, ..CorpusParams::default() };
    let table = CorpusTable::new(&Corpus::generate(w.domain(), pl)?, w.limits())?;
    c.expect("System P on dependence-free formulas", check_system_p(&w, &table)?.holds, true);
    c.expect(
        "dep(p) | dep(p) |~ dep(p)",
        w.entails(&f("dep(p) | dep(p)"), &f("dep(p)"))?.holds,
        false,
    );
    let v = or_counterexample(&w)?;
    if let Some(v) = &v {
        c.out.line(&format!("  Or violation: phi={} psi={} gamma={}", v.phi, v.psi, v.gamma));
    }
    c.expect("Or violation constructed", v.is_some(), true);
    Ok(())
}

fn reconstruction(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("reconstruction: subteam order over p q against classical consequence");
    let d = Domain::new(["p", "q"])?;
    let w = w_sub(&d, &Limits::default())?;
    let classical = w.induce_classical();
    let corpus = Corpus::generate(&d, CorpusParams::default())?;
    let (mut agree_c, mut agree_i, mut pairs) = (true, true, 0usize);
    for a in corpus.formulas() {
        for b in corpus.formulas() {
            pairs += 1;
            let here = w.entails(a, b)?.holds;
            agree_c &= here == entails_classical(&a.flatten(), &b.flatten(), &d)?;
            agree_i &= here == classical.entails(&a.flatten(), &b.flatten())?.holds;
        }
    }
    c.out.line(&format!("  {pairs} formula pairs"));
    c.expect("agrees with classical consequence of flattenings", agree_c, true);
    c.expect("agrees with the induced classical model", agree_i, true);
    Ok(())
}

fn lex_circuit(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("lex-circuit: n = 2, inputs a1 a0 b1 b0");
    let lex = build_lex_circuit(2, Variant::Lex, Strictness::Strict);
    let rlex = build_lex_circuit(2, Variant::Rlex, Strictness::Strict);
    let mut ok = true;
    c.out.line("  a  b  lex rlex");
    for x in 0..4u32 {
        for y in 0..4u32 {
            let (sa, sb) = (format!("{x:02b}"), format!("{y:02b}"));
            let bits: Vec<bool> = sa.chars().chain(sb.chars()).map(|ch| ch == '1').collect();
            let (l, r) = (lex.eval(&bits)?[0], rlex.eval(&bits)?[0]);
            ok &= l == (sa < sb) && r == (sb < sa);
            c.out.line(&format!("  {sa} {sb}  {}   {}", u8::from(l), u8::from(r)));
        }
    }
    c.expect("tables match string order", ok, true);
    Ok(())
}

fn olms_example(c: &mut Checks) -> anyhow::Result<()> {
    c.out.line("olms-reduction: largest model sets the last variable iff entailment of ~x_n fails");
    let d = Domain::new(["x1", "x2", "x3"])?;
    let l = Limits::default();
    for g in ["x1 | x2", "x1 & ~x3", "x2 & (x3 | ~x1)", "F", "~x1 | ~x2 | ~x3"] {
        let phi = f(g);
        let largest = olms(&phi, &d, &l)?;
        let (m, a, b) = olms_reduction(&phi, &d)?;
        let generic = succ_entails_generic(&m, &a, &b, &l)?.holds;
        let rlex = succ_entails_rlex(&m, &a, &b, &l)?;
        c.out.line(&format!("  {phi}: olms {largest}, ~x3 entailed {generic}"));
        c.expect(&format!("{phi}: olms is the negated entailment"), largest == !generic, true);
        c.expect(&format!("{phi}: search and exhaustive algorithms agree"), rlex.holds == generic, true);
        c.expect(&format!("{phi}: {} oracle calls", rlex.oracle_calls), rlex.oracle_calls == d.len(), true);
    }
    Ok(())
}
