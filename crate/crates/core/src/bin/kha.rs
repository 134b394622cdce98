use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use kha::categories::{self, Ranks};
use kha::dsym::{self, Strategy};
use kha::io::{self, q_json, qvec_json, record};
use kha::polytope::{self, AdmissibleVerdict, PolytopeSpec, RValue, SfTree};
use kha::quiver::DimVec;
use kha::rational::{fmt_qvec, Q};
use kha::shuffle::{bbw, relations, shuffle_mul};
use kha::weights::{self, Layout};
use kha::{Error, Result};

#[derive(Parser)]
#[command(name = "kha", version, about = "Exact computations in K-theoretic Hall algebras of quivers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for parallel enumerations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// r- and p-invariants and the face character of a weight.
    RInvariant {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// Use chi + rho.
        #[arg(long)]
        plus_rho: bool,
    },
    /// Standard-form decomposition of a weight.
    StandardForm {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        #[arg(long)]
        plus_rho: bool,
    },
    /// Classify a tuple `d1:w1; d2:w2; ...`.
    Admissible {
        #[arg(long)]
        quiver: String,
        #[arg(long, allow_hyphen_values = true)]
        pair: String,
    },
    /// Ranks of N̄(d)_w and N(d)_w over a weight window.
    MagicDim {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        w_min: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        w_max: i64,
    },
    /// Checks the dominant-weight / admissible-tuple bijection on a box.
    PbwCheck {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Shuffle product of two polynomial files.
    Shuffle {
        /// plain | jordan | an:N | fo | edge | sh:N
        #[arg(long)]
        kernel: String,
        #[arg(long)]
        quiver: Option<String>,
        /// Dimension of f; defaults to the first unit vector.
        #[arg(long)]
        d: Option<String>,
        /// Dimension of g.
        #[arg(long)]
        e: Option<String>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Quantum Serre relations in the quantum loop presentation.
    SerreCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Mutation identity over all dominant weights with coordinates in [-bound, bound].
    MutationCheck {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        e: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Normal form of a dSym word `d:w:i d:w:i ...`.
    DsymNf {
        #[arg(long)]
        quiver: String,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Instead of --word, rewrite this many seeded random words.
        #[arg(long)]
        random: Option<usize>,
    },
}

enum Outcome {
    Pass,
    Fail,
}

struct Out {
    format: Format,
}

impl Out {
    fn emit(&self, text: impl AsRef<str>, kind: &str, fields: serde_json::Value) {
        match self.format {
            Format::Text => println!("{}", text.as_ref()),
            Format::Json => println!("{}", record(kind, fields)),
        }
    }
}

fn with_rho(d: &[u32], chi: Vec<Q>, plus_rho: bool) -> Vec<Q> {
    if !plus_rho {
        return chi;
    }
    chi.iter().zip(weights::rho(d)).map(|(a, b)| a + b).collect()
}

fn dims_str(d: &[u32]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli) -> Result<Outcome> {
    let out = Out { format: cli.format };
    match cli.cmd {
        Cmd::RInvariant { quiver, d, chi, plus_rho } => {
            let q = io::load_quiver(&quiver)?;
            let d = io::parse_dims(&d)?;
            let chi = with_rho(&d, io::parse_weight(&chi)?, plus_rho);
            polytope::check_capacity(&d)?;
            q.check_dim(&d)?;
            Layout::new(&d).check(&chi)?;
            let spec = PolytopeSpec::new(&q, &d)?;
            let r = spec.r_invariant(&chi)?;
            let p = match r {
                RValue::Finite(_) => Some(spec.p_invariant(&chi)?),
                RValue::Infinite => None,
            };
            let face = match &r {
                RValue::Finite(x) if *x > Q::from_integer(0.into()) => Some(spec.face_character(&chi)?),
                _ => None,
            };
            let mut text = format!("r = {r}");
            if let Some(p) = p {
                text.push_str(&format!("\np = {p}"));
            }
            if let Some(f) = &face {
                text.push_str(&format!("\nlambda = {}", fmt_qvec(&f.lambda)));
            }
            out.emit(
                text,
                "r-invariant",
                json!({
                    "d": d, "chi": qvec_json(&chi), "r": r.to_string(), "p": p,
                    "lambda": face.as_ref().map(|f| qvec_json(&f.lambda)),
                }),
            );
            Ok(Outcome::Pass)
        }
        Cmd::StandardForm { quiver, d, chi, plus_rho } => {
            let q = io::load_quiver(&quiver)?;
            let d = io::parse_dims(&d)?;
            let chi = with_rho(&d, io::parse_weight(&chi)?, plus_rho);
            let sf = polytope::standard_form(&q, &d, &chi)?;
            let mut lines = Vec::new();
            let mut records = Vec::new();
            fn walk(t: &SfTree, depth: usize, lines: &mut Vec<String>, records: &mut Vec<serde_json::Value>) {
                let pad = "  ".repeat(depth);
                match t {
                    SfTree::Node(n) => {
                        lines.push(format!("{pad}face r={} coords={:?} lambda={}", n.r, n.coords, fmt_qvec(&n.lambda)));
                        records.push(json!({"kind": "face", "depth": depth, "coords": n.coords, "r": q_json(&n.r), "lambda": qvec_json(&n.lambda)}));
                        for c in &n.children {
                            walk(c, depth + 1, lines, records);
                        }
                    }
                    SfTree::Leaf(l) => {
                        lines.push(format!("{pad}block d={:?} coords={:?} residual={} r={}", l.dims, l.coords, fmt_qvec(&l.residual), l.r));
                        records.push(json!({"kind": "block", "depth": depth, "dims": l.dims, "coords": l.coords, "residual": qvec_json(&l.residual), "r": q_json(&l.r)}));
                    }
                }
            }
            walk(&sf.root, 0, &mut lines, &mut records);
            match out.format {
                Format::Text => println!("{}", lines.join("\n")),
                Format::Json => records.into_iter().for_each(|r| println!("{}", record("standard-form", r))),
            }
            Ok(Outcome::Pass)
        }
        Cmd::Admissible { quiver, pair } => {
            let q = io::load_quiver(&quiver)?;
            let pairs = io::parse_pairs(&pair)?;
            let v = polytope::classify_admissible(&q, &pairs)?;
            let (text, fields) = match &v {
                AdmissibleVerdict::NotAdmissible { levi } => {
                    (format!("not admissible (levi {levi:?})"), json!({"admissible": false, "levi": levi}))
                }
                AdmissibleVerdict::Admissible(a) => (
                    format!("admissible all_half={} all_big={} levi={:?}", a.all_half, a.all_big, a.levi),
                    json!({"admissible": true, "all_half": a.all_half, "all_big": a.all_big, "levi": a.levi}),
                ),
            };
            out.emit(text, "admissible", fields);
            Ok(Outcome::Pass)
        }
        Cmd::MagicDim { quiver, d, w_min, w_max } => {
            let q = io::load_quiver(&quiver)?;
            let d = io::parse_dims(&d)?;
            if w_min > w_max {
                return Err(Error::Malformed("--w-min exceeds --w-max".into()));
            }
            let mut ranks = Ranks::new(&q)?;
            let mut total = 0;
            for w in w_min..=w_max {
                let nbar = ranks.nbar_rank(&d, w)?;
                let n = ranks.n_rank(&d, w)?;
                total += n;
                out.emit(format!("d={} w={w} nbar={nbar} n={n}", dims_str(&d)), "magic-dim", json!({"d": d, "w": w, "nbar": nbar, "n": n}));
            }
            out.emit(format!("total n_rank {total}"), "magic-dim-total", json!({"d": d, "total": total}));
            Ok(Outcome::Pass)
        }
        Cmd::PbwCheck { quiver, d, bound } => {
            let q = io::load_quiver(&quiver)?;
            let d = io::parse_dims(&d)?;
            let rep = categories::pbw_bijection_check(&q, &d, bound)?;
            let verdict = if rep.passed() { "PASS" } else { "FAIL" };
            let first = rep.failures.first();
            let mut text = format!("{verdict} pbw-check d={} bound={bound} checked={}", dims_str(&d), rep.checked);
            if let Some(f) = first {
                text.push_str(&format!("\nfirst failure chi={}: {}", fmt_qvec(&f.chi), f.reason));
            }
            out.emit(
                text,
                "pbw-check",
                json!({"pass": rep.passed(), "checked": rep.checked, "failures": rep.failures.len(),
                       "first": first.map(|f| json!({"chi": qvec_json(&f.chi), "reason": f.reason}))}),
            );
            Ok(if rep.passed() { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::Shuffle { kernel, quiver, d, e, f, g } => {
            let q = quiver.as_deref().map(io::load_quiver).transpose()?;
            let k = io::parse_kernel(&kernel, q.as_ref())?;
            let unit: DimVec = {
                let mut u = vec![0; k.colours()];
                u[0] = 1;
                u
            };
            let d = d.as_deref().map(io::parse_dims).transpose()?.unwrap_or_else(|| unit.clone());
            let e = e.as_deref().map(io::parse_dims).transpose()?.unwrap_or(unit);
            let f = io::read_element(&f, &d)?;
            let g = io::read_element(&g, &e)?;
            let p = shuffle_mul(&k, &f, &g)?;
            match out.format {
                Format::Text => {
                    println!("# {} * {} -> {:?}: {}", dims_str(&d), dims_str(&e), p.dims(), io::pretty_element(&p));
                    print!("{}", io::format_element(&p));
                }
                Format::Json => {
                    for (ex, c) in p.num().terms() {
                        println!("{}", record("term", json!({"coeff": q_json(&c), "exp": ex})));
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Cmd::SerreCheck { n } => {
            let k = kha::shuffle::Kernel::quantum_loop(n)?;
            let mut ok = true;
            for i in 0..n {
                for j in [i.wrapping_sub(1), i + 1] {
                    if j >= n {
                        continue;
                    }
                    let s = relations::serre(&k, i, j)?;
                    let pass = s.is_zero();
                    ok &= pass;
                    let mut text = format!("{} serre i={i} j={j}", if pass { "PASS" } else { "FAIL" });
                    if !pass {
                        text.push_str(&format!("\nresidual {}", io::pretty_element(&s)));
                    }
                    out.emit(text, "serre-check", json!({"i": i, "j": j, "pass": pass}));
                }
            }
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::MutationCheck { quiver, d, e, bound } => {
            let q = io::load_quiver(&quiver)?;
            let d = io::parse_dims(&d)?;
            let e = io::parse_dims(&e)?;
            let (nd, ne) = (Layout::new(&d).len(), Layout::new(&e).len());
            let mut checked = 0usize;
            let mut first: Option<(Vec<Q>, Vec<Q>, bbw::MutationReport)> = None;
            let mut failures = 0usize;
            let mut x = vec![-bound; nd + ne];
            loop {
                let cd: Vec<Q> = x[..nd].iter().map(|&v| Q::from_integer(v.into())).collect();
                let ce: Vec<Q> = x[nd..].iter().map(|&v| Q::from_integer(v.into())).collect();
                if weights::is_dominant(&d, &cd) && weights::is_dominant(&e, &ce) {
                    checked += 1;
                    let rep = bbw::mutation_sides(&q, &d, &e, &cd, &ce)?;
                    if !rep.holds() {
                        failures += 1;
                        first.get_or_insert((cd, ce, rep));
                    }
                }
                let mut k = 0;
                while k < x.len() && x[k] == bound {
                    x[k] = -bound;
                    k += 1;
                }
                if k == x.len() {
                    break;
                }
                x[k] += 1;
            }
            let pass = failures == 0;
            let mut text = format!("{} mutation-check d={} e={} checked={checked} failures={failures}", if pass { "PASS" } else { "FAIL" }, dims_str(&d), dims_str(&e));
            if let Some((cd, ce, rep)) = &first {
                text.push_str(&format!("\nfirst counterexample chi_d={} chi_e={}: lhs={:?} rhs={:?}", fmt_qvec(cd), fmt_qvec(ce), rep.lhs, rep.rhs));
            }
            out.emit(
                text,
                "mutation-check",
                json!({"pass": pass, "checked": checked, "failures": failures,
                       "first": first.as_ref().map(|(cd, ce, _)| json!({"chi_d": qvec_json(cd), "chi_e": qvec_json(ce)}))}),
            );
            Ok(if pass { Outcome::Pass } else { Outcome::Fail })
        }
        Cmd::DsymNf { quiver, word, random } => {
            let q = io::load_quiver(&quiver)?;
            let words = match (word, random) {
                (Some(w), None) => vec![dsym::parse_word(&w)?],
                (None, Some(n)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    (0..n).map(|_| dsym::random_word(&q, &mut rng, 4, 5, 1)).collect()
                }
                _ => return Err(Error::Malformed("give exactly one of --word and --random".into())),
            };
            for w in words {
                for l in &w.letters {
                    q.check_dim(&l.d)?;
                }
                let nf = dsym::dsym_normal_form(&q, &w, Strategy::Leftmost)?;
                out.emit(format!("{w} -> {nf}"), "dsym-nf", json!({"word": w.to_string(), "normal_form": nf.to_string()}));
            }
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().expect("thread pool configured once");
    }
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
