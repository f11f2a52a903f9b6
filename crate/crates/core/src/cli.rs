//! Command-line surface: `cfk`, `mcg`, `ob` and `hd` subcommands over
//! the library engines. Reports are plain `key: value` text, byte-stable
//! for fixed inputs. Exit codes: 0 success, 1 usage or parse errors,
//! 2 domain errors.

use std::fmt::Write as _;

use crate::cfk::{
    self, associated_graded, contact_class, hat_column, homology, homology_bifiltered,
    mirror_dual, sublevel, tensor_filtered, CfkError, HomologyPresentation,
};
use crate::heegaard::{
    build_model_diagram, minimal_chern_points, periodic_domains, weak_admissibility,
    chern_evaluation, DiagramError, MeasuredDiagram, ModelVariant, PeriodicDomain,
    DEFAULT_COMBINATION_CAP, DEFAULT_SEARCH_BOX, DEFAULT_TUPLE_CAP,
};
use crate::io::{emit_cfk_bifiltered, emit_cfk_hat, emit_diagram, parse_cfk, parse_diagram, ParsedComplex};
use crate::mcg::{
    boundary_connect_sum, braid_normal_form, compose_surgery, homological_action, hopf_invariant,
    is_positive, stein_certificate, words_equal, Curve, OpenBook, Positivity, SteinCertificate,
    TwistWord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

enum Failure {
    Usage(String),
    Domain(String),
    /// A report that belongs on stdout but still signals a domain error.
    DomainWithReport(String),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
    fn domain(msg: impl std::fmt::Display) -> Self {
        Failure::Domain(msg.to_string())
    }
}

impl From<CfkError> for Failure {
    fn from(e: CfkError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<crate::mcg::WordError> for Failure {
    fn from(e: crate::mcg::WordError) -> Self {
        // bad word syntax is a parse problem, semantic mismatches are not
        match e {
            crate::mcg::WordError::Parse(_, _) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<crate::mcg::BraidError> for Failure {
    fn from(e: crate::mcg::BraidError) -> Self {
        match e {
            crate::mcg::BraidError::Word(w) => w.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<crate::mcg::OpenBookError> for Failure {
    fn from(e: crate::mcg::OpenBookError) -> Self {
        match e {
            crate::mcg::OpenBookError::Word(w) => w.into(),
            crate::mcg::OpenBookError::Braid(b) => b.into(),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Parsed flag set: positional arguments plus `--key value` options.
struct Args {
    positional: Vec<String>,
    options: Vec<(String, String)>,
}

/// Flags that take no value.
const BOOLEAN_FLAGS: &[&str] = &["chern"];

impl Args {
    fn parse(raw: &[String]) -> Result<Args, Failure> {
        let mut positional = Vec::new();
        let mut options = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            if let Some(key) = raw[i].strip_prefix("--") {
                if BOOLEAN_FLAGS.contains(&key) {
                    options.push((key.to_string(), "true".to_string()));
                    i += 1;
                    continue;
                }
                let value = raw
                    .get(i + 1)
                    .ok_or_else(|| Failure::usage(format!("flag --{key} needs a value")))?;
                options.push((key.to_string(), value.clone()));
                i += 2;
            } else {
                positional.push(raw[i].clone());
                i += 1;
            }
        }
        Ok(Args { positional, options })
    }

    fn opt(&self, key: &str) -> Option<&str> {
        self.options
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn opt_parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, Failure> {
        match self.opt(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Failure::usage(format!("bad value `{v}` for --{key}"))),
        }
    }

    fn unknown_options(&self, allowed: &[&str]) -> Result<(), Failure> {
        for (k, _) in &self.options {
            if !allowed.contains(&k.as_str()) {
                return Err(Failure::usage(format!("unknown flag --{k}")));
            }
        }
        Ok(())
    }

    fn exactly(&self, n: usize, usage: &str) -> Result<(), Failure> {
        if self.positional.len() != n {
            return Err(Failure::usage(format!("usage: {usage}")));
        }
        Ok(())
    }
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))
}

fn load_complex(path: &str) -> Result<ParsedComplex, Failure> {
    let text = read_file(path)?;
    parse_cfk(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn load_hat(path: &str, op: &str) -> Result<cfk::HatFilteredComplex, Failure> {
    match load_complex(path)? {
        ParsedComplex::Hat(c) => Ok(c),
        ParsedComplex::Bifiltered(_) => {
            Err(Failure::domain(format!("{op} expects a hat complex, {path} is bifiltered")))
        }
    }
}

fn load_bifiltered(path: &str, op: &str) -> Result<cfk::BifilteredComplex, Failure> {
    match load_complex(path)? {
        ParsedComplex::Bifiltered(c) => Ok(c),
        ParsedComplex::Hat(_) => {
            Err(Failure::domain(format!("{op} expects a bifiltered complex, {path} is hat")))
        }
    }
}

fn load_diagram(path: &str) -> Result<MeasuredDiagram, Failure> {
    let text = read_file(path)?;
    parse_diagram(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn parse_word(text: &str, genus: Option<u32>) -> Result<TwistWord, Failure> {
    Ok(match genus {
        Some(g) => TwistWord::parse_with_genus(text, g)?,
        None => TwistWord::parse(text)?,
    })
}

fn homology_report(out: &mut String, name: &str, ring: &str, h: &HomologyPresentation, chains: Vec<String>) {
    let _ = writeln!(out, "complex: {name}");
    let _ = writeln!(out, "ring: {ring}");
    let _ = writeln!(out, "free_rank: {}", h.free_rank);
    if h.torsion.is_empty() {
        let _ = writeln!(out, "torsion: -");
    } else {
        let _ = writeln!(
            out,
            "torsion: {}",
            h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
        );
    }
    for (k, chain) in chains.iter().enumerate() {
        if k < h.free_rank {
            let _ = writeln!(out, "h{k}: {chain}");
        } else {
            let _ = writeln!(out, "t{}: {} (order {})", k - h.free_rank, chain, h.torsion[k - h.free_rank]);
        }
    }
}

fn run_cfk(args: &Args) -> Result<String, Failure> {
    let mut out = String::new();
    let cmd = args.positional.first().map(String::as_str).unwrap_or("");
    match cmd {
        "validate" => {
            args.exactly(2, "cfk validate <file>")?;
            args.unknown_options(&[])?;
            let c = load_complex(&args.positional[1])?;
            let report = match &c {
                ParsedComplex::Bifiltered(b) => b.validate(),
                ParsedComplex::Hat(h) => h.validate(),
            };
            let _ = writeln!(out, "complex: {}", c.name());
            let _ = writeln!(out, "valid: {}", report.is_valid());
            for v in &report.violations {
                let _ = writeln!(out, "violation: {v}");
            }
            if !report.is_valid() {
                return Err(Failure::DomainWithReport(out));
            }
        }
        "homology" => {
            args.exactly(2, "cfk homology <file>")?;
            args.unknown_options(&[])?;
            match load_complex(&args.positional[1])? {
                ParsedComplex::Bifiltered(c) => {
                    let h = homology_bifiltered(&c)?;
                    let chains = h.basis_map.iter().map(|ch| c.format_chain(ch)).collect();
                    homology_report(&mut out, &c.name, &c.ring.to_string(), &h, chains);
                }
                ParsedComplex::Hat(c) => {
                    let h = homology(&c)?;
                    let chains = h.basis_map.iter().map(|ch| c.format_chain(ch)).collect();
                    homology_report(&mut out, &c.name, &c.ring.to_string(), &h, chains);
                }
            }
        }
        "hat" => {
            args.exactly(2, "cfk hat <file>")?;
            args.unknown_options(&[])?;
            let c = load_bifiltered(&args.positional[1], "cfk hat")?;
            c.ensure_valid("hat_column")?;
            out.push_str(&emit_cfk_hat(&hat_column(&c)));
        }
        "mirror" => {
            args.exactly(2, "cfk mirror <file>")?;
            args.unknown_options(&[])?;
            let c = load_bifiltered(&args.positional[1], "cfk mirror")?;
            c.ensure_valid("mirror_dual")?;
            out.push_str(&emit_cfk_bifiltered(&mirror_dual(&c)));
        }
        "tensor" => {
            args.exactly(3, "cfk tensor <file1> <file2>")?;
            args.unknown_options(&[])?;
            let a = load_hat(&args.positional[1], "cfk tensor")?;
            let b = load_hat(&args.positional[2], "cfk tensor")?;
            out.push_str(&emit_cfk_hat(&tensor_filtered(&a, &b)?));
        }
        "sublevel" => {
            args.exactly(3, "cfk sublevel <file> <m>")?;
            args.unknown_options(&[])?;
            let m: i64 = args.positional[2]
                .parse()
                .map_err(|_| Failure::usage("sublevel cutoff must be an integer"))?;
            let c = load_hat(&args.positional[1], "cfk sublevel")?;
            c.ensure_valid("sublevel")?;
            out.push_str(&emit_cfk_hat(&sublevel(&c, m)));
        }
        "graded" => {
            args.exactly(2, "cfk graded <file>")?;
            args.unknown_options(&[])?;
            let c = load_hat(&args.positional[1], "cfk graded")?;
            c.ensure_valid("associated_graded")?;
            let _ = writeln!(out, "complex: {}", c.name);
            for level in associated_graded(&c) {
                let torsion = if level.homology.torsion.is_empty() {
                    "-".to_string()
                } else {
                    level
                        .homology
                        .torsion
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let _ = writeln!(
                    out,
                    "level {}: generators {}, free_rank {}, torsion {}",
                    level.level,
                    level.complex.generators.len(),
                    level.homology.free_rank,
                    torsion
                );
            }
        }
        "contact" => {
            args.exactly(2, "cfk contact <file> --genus <g>")?;
            args.unknown_options(&["genus"])?;
            let genus: u32 = args
                .opt_parsed("genus")?
                .ok_or_else(|| Failure::usage("cfk contact needs --genus <g>"))?;
            let c = load_hat(&args.positional[1], "cfk contact")?;
            let report = contact_class(&c, genus)?;
            let _ = writeln!(out, "complex: {}", c.name);
            let _ = writeln!(out, "genus: {genus}");
            let _ = writeln!(out, "sublevel_rank: {}", report.sublevel_homology.free_rank);
            let _ = writeln!(out, "status: {}", report.status);
            let _ = writeln!(out, "representative: {}", c.format_chain(&report.representative));
            let _ = writeln!(out, "note: class defined up to sign");
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown cfk subcommand `{other}` (validate|homology|hat|mirror|tensor|sublevel|graded|contact)"
            )))
        }
    }
    Ok(out)
}

fn run_mcg(args: &Args) -> Result<String, Failure> {
    let mut out = String::new();
    let cmd = args.positional.first().map(String::as_str).unwrap_or("");
    match cmd {
        "nf" => {
            args.exactly(2, "mcg nf <word> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let w = parse_word(&args.positional[1], args.opt_parsed("genus")?)?;
            let nf = braid_normal_form(&w)?;
            let _ = writeln!(out, "infimum: {}", nf.infimum);
            let factors: Vec<&str> = nf.factors.iter().map(|p| p.reduced_word()).collect();
            let _ = writeln!(
                out,
                "factors: {}",
                if factors.is_empty() { "-".to_string() } else { factors.join(" ") }
            );
        }
        "equal" => {
            args.exactly(3, "mcg equal <word1> <word2> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let genus = args.opt_parsed("genus")?;
            let w1 = parse_word(&args.positional[1], genus)?;
            let w2 = parse_word(&args.positional[2], genus)?;
            let _ = writeln!(out, "{}", words_equal(&w1, &w2)?);
        }
        "positive" => {
            args.exactly(2, "mcg positive <word> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let w = parse_word(&args.positional[1], args.opt_parsed("genus")?)?;
            match is_positive(&w)? {
                Positivity::PositiveSyntactic => {
                    let _ = writeln!(out, "status: POSITIVE_SYNTACTIC");
                }
                Positivity::PositiveWithWitness(witness) => {
                    let _ = writeln!(out, "status: POSITIVE_WITH_WITNESS");
                    let _ = writeln!(out, "witness: {witness}");
                }
                Positivity::NotPositive => {
                    let _ = writeln!(out, "status: NOT_POSITIVE");
                }
                Positivity::Unknown => {
                    let _ = writeln!(out, "status: UNKNOWN");
                }
            }
        }
        "action" => {
            args.exactly(2, "mcg action <word> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let w = parse_word(&args.positional[1], args.opt_parsed("genus")?)?;
            for row in homological_action(&w) {
                let _ = writeln!(
                    out,
                    "{}",
                    row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                );
            }
        }
        "hopf" => {
            args.exactly(4, "mcg hopf <c1^2> <chi> <sigma>")?;
            args.unknown_options(&[])?;
            let nums: Vec<i64> = args.positional[1..]
                .iter()
                .map(|s| {
                    s.parse()
                        .map_err(|_| Failure::usage(format!("bad integer `{s}`")))
                })
                .collect::<Result<_, _>>()?;
            let h = hopf_invariant(nums[0], nums[1], nums[2]);
            if h.is_integer() {
                let _ = writeln!(out, "{}", h.to_integer());
            } else {
                let _ = writeln!(out, "{}/{}", h.numer(), h.denom());
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown mcg subcommand `{other}` (nf|equal|positive|action|hopf)"
            )))
        }
    }
    Ok(out)
}

fn run_ob(args: &Args) -> Result<String, Failure> {
    let mut out = String::new();
    let cmd = args.positional.first().map(String::as_str).unwrap_or("");
    let book = |word_text: &str, genus: Option<u32>| -> Result<OpenBook, Failure> {
        let w = parse_word(word_text, genus)?;
        Ok(OpenBook::new(w.genus, w)?)
    };
    match cmd {
        "stabilize" => {
            args.exactly(2, "ob stabilize <word> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let ob = book(&args.positional[1], args.opt_parsed("genus")?)?;
            let st = crate::mcg::giroux_stabilize(&ob);
            let _ = writeln!(out, "genus: {}", st.page_genus);
            let _ = writeln!(out, "word: {}", st.monodromy);
        }
        "sum" => {
            args.exactly(3, "ob sum <word1> <word2> [--genus1 g] [--genus2 g]")?;
            args.unknown_options(&["genus1", "genus2"])?;
            let ob1 = book(&args.positional[1], args.opt_parsed("genus1")?)?;
            let ob2 = book(&args.positional[2], args.opt_parsed("genus2")?)?;
            let sum = boundary_connect_sum(&ob1, &ob2)?;
            let _ = writeln!(out, "genus: {}", sum.page_genus);
            let _ = writeln!(out, "word: {}", sum.monodromy);
        }
        "surgery" => {
            args.exactly(2, "ob surgery <word> --curve <c> --coeff <+1|-1> [--genus g]")?;
            args.unknown_options(&["genus", "curve", "coeff"])?;
            let ob = book(&args.positional[1], args.opt_parsed("genus")?)?;
            let curve_text = args
                .opt("curve")
                .ok_or_else(|| Failure::usage("ob surgery needs --curve"))?;
            let coeff: i8 = args
                .opt_parsed("coeff")?
                .ok_or_else(|| Failure::usage("ob surgery needs --coeff +1 or -1"))?;
            if coeff != 1 && coeff != -1 {
                return Err(Failure::usage("--coeff must be +1 or -1"));
            }
            let curve_word = TwistWord::parse_with_genus(curve_text, ob.page_genus)?;
            if curve_word.letters.len() != 1 || curve_word.letters[0].sense != 1 {
                return Err(Failure::usage("--curve names a single curve, like a1 or b2"));
            }
            let curve: Curve = curve_word.letters[0].curve;
            let d = compose_surgery(&ob, curve, coeff)?;
            let _ = writeln!(out, "curve: {curve}");
            let _ = writeln!(out, "coefficient: {coeff:+}");
            let _ = writeln!(out, "word: {}", d.result.monodromy);
        }
        "stein" => {
            args.exactly(2, "ob stein <word> [--genus g]")?;
            args.unknown_options(&["genus"])?;
            let ob = book(&args.positional[1], args.opt_parsed("genus")?)?;
            match stein_certificate(&ob)? {
                SteinCertificate::Certified(witness) => {
                    let _ = writeln!(out, "status: CERTIFIED");
                    let _ = writeln!(out, "witness: {witness}");
                }
                SteinCertificate::NotCertified => {
                    let _ = writeln!(out, "status: NOT_CERTIFIED");
                    let _ = writeln!(
                        out,
                        "note: the word as written is not a positive product; positivity of stabilizations is undecided"
                    );
                }
                SteinCertificate::Unknown => {
                    let _ = writeln!(out, "status: UNKNOWN");
                }
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown ob subcommand `{other}` (stabilize|sum|surgery|stein)"
            )))
        }
    }
    Ok(out)
}

fn domain_line(d: &MeasuredDiagram, dom: &PeriodicDomain) -> String {
    let parts: Vec<String> = d
        .regions
        .iter()
        .zip(&dom.multiplicities)
        .filter(|(_, &m)| m != 0)
        .map(|(r, &m)| format!("{}={m}", r.id))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

fn boundary_line(d: &MeasuredDiagram, dom: &PeriodicDomain) -> String {
    let terms = d.domain_boundary(dom);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (curve, mult)) in terms.iter().enumerate() {
        if k == 0 {
            if *mult < 0 {
                s.push_str("- ");
            }
        } else if *mult < 0 {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        if mult.abs() != 1 {
            let _ = write!(s, "{} ", mult.abs());
        }
        s.push_str(curve);
    }
    s
}

fn run_hd(args: &Args) -> Result<String, Failure> {
    let mut out = String::new();
    let cmd = args.positional.first().map(String::as_str).unwrap_or("");
    match cmd {
        "model" => {
            args.exactly(1, "hd model --genus <g> [--variant v] [--chern yes]")?;
            args.unknown_options(&["genus", "variant", "chern"])?;
            let genus: u32 = args
                .opt_parsed("genus")?
                .ok_or_else(|| Failure::usage("hd model needs --genus <g>"))?;
            if genus == 0 {
                return Err(Failure::domain("the model family starts at fiber genus 1"));
            }
            let variant = match args.opt("variant") {
                None | Some("twice-wound") => ModelVariant::TwiceWound,
                Some("once-wound") => ModelVariant::OnceWound,
                Some("pre-winding") => ModelVariant::PreWinding,
                Some(other) => {
                    return Err(Failure::usage(format!(
                        "unknown variant `{other}` (twice-wound|once-wound|pre-winding)"
                    )))
                }
            };
            let model = build_model_diagram(genus, variant);
            if args.opt("chern").is_some() {
                if variant != ModelVariant::TwiceWound {
                    return Err(Failure::domain(
                        "--chern reports the distinguished tuple of the twice-wound model",
                    ));
                }
                let value = model.distinguished_chern()?;
                let _ = writeln!(out, "chern(x') = {value}");
            } else {
                out.push_str(&emit_diagram(&model.diagram));
            }
        }
        "domains" => {
            args.exactly(2, "hd domains <file>")?;
            args.unknown_options(&[])?;
            let d = load_diagram(&args.positional[1])?;
            let basis = periodic_domains(&d)?;
            let _ = writeln!(out, "rank: {}", basis.len());
            for (k, dom) in basis.iter().enumerate() {
                let _ = writeln!(out, "domain {k}: {}", domain_line(&d, dom));
                let _ = writeln!(out, "boundary {k}: {}", boundary_line(&d, dom));
            }
        }
        "chern" => {
            args.exactly(2, "hd chern <file> --tuple p1,p2,... [--domain-index k]")?;
            args.unknown_options(&["tuple", "domain-index"])?;
            let d = load_diagram(&args.positional[1])?;
            let tuple_text = args
                .opt("tuple")
                .ok_or_else(|| Failure::usage("hd chern needs --tuple <p1,p2,...>"))?;
            let ids: Vec<String> = tuple_text.split(',').map(str::to_string).collect();
            let tuple = d.tuple_from_ids(&ids)?;
            let basis = periodic_domains(&d)?;
            let index: usize = args.opt_parsed("domain-index")?.unwrap_or(0);
            let dom = basis.get(index).ok_or_else(|| {
                Failure::domain(format!("domain index {index} out of range, rank is {}", basis.len()))
            })?;
            let value = chern_evaluation(&d, &tuple, dom)?;
            let _ = writeln!(out, "chern: {value}");
        }
        "admissible" => {
            args.exactly(2, "hd admissible <file> [--box b]")?;
            args.unknown_options(&["box"])?;
            let d = load_diagram(&args.positional[1])?;
            let bound: i64 = args.opt_parsed("box")?.unwrap_or(DEFAULT_SEARCH_BOX);
            let report = weak_admissibility(&d, bound, DEFAULT_COMBINATION_CAP)?;
            let _ = writeln!(out, "admissible: {}", report.admissible);
            let _ = writeln!(out, "box: {}", report.search_box);
            if let Some(w) = &report.witness {
                let _ = writeln!(out, "witness: {}", domain_line(&d, w));
            }
            if !report.exhausted {
                let _ = writeln!(out, "note: search truncated by the combination cap");
            }
        }
        "minimal" => {
            args.exactly(2, "hd minimal <file> [--domain-index k] [--cap n]")?;
            args.unknown_options(&["domain-index", "cap"])?;
            let d = load_diagram(&args.positional[1])?;
            let basis = periodic_domains(&d)?;
            let index: usize = args.opt_parsed("domain-index")?.unwrap_or(0);
            let dom = basis.get(index).ok_or_else(|| {
                Failure::domain(format!("domain index {index} out of range, rank is {}", basis.len()))
            })?;
            let cap: usize = args.opt_parsed("cap")?.unwrap_or(DEFAULT_TUPLE_CAP);
            let (value, minimizers) = minimal_chern_points(&d, dom, cap)?;
            let _ = writeln!(out, "minimum: {value}");
            let _ = writeln!(out, "count: {}", minimizers.len());
            for t in &minimizers {
                let _ = writeln!(out, "tuple: {}", d.tuple_ids(t).join(" "));
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown hd subcommand `{other}` (model|domains|chern|admissible|minimal)"
            )))
        }
    }
    Ok(out)
}

const USAGE: &str = "usage: floerkit <cfk|mcg|ob|hd> <subcommand> ...\n\
    cfk validate|homology|hat|mirror|tensor|sublevel|graded|contact\n\
    mcg nf|equal|positive|action|hopf\n\
    ob  stabilize|sum|surgery|stein\n\
    hd  model|domains|chern|admissible|minimal\n";

/// Dispatch a full argument vector (without the program name). Returns
/// the exit code; the report goes to `stdout`, failures to `stderr`.
pub fn run(raw: &[String], stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32 {
    let result = (|| -> Result<String, Failure> {
        let Some(group) = raw.first() else {
            return Err(Failure::usage(USAGE.trim_end()));
        };
        let rest = Args::parse(&raw[1..])?;
        match group.as_str() {
            "cfk" => run_cfk(&rest),
            "mcg" => run_mcg(&rest),
            "ob" => run_ob(&rest),
            "hd" => run_hd(&rest),
            other => Err(Failure::usage(format!("unknown command group `{other}`\n{USAGE}"))),
        }
    })();
    match result {
        Ok(report) => {
            let _ = stdout.write_all(report.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::DomainWithReport(report)) => {
            let _ = stdout.write_all(report.as_bytes());
            EXIT_DOMAIN
        }
    }
}

