//! Construct-and-verify over a range of `(n, λ)`, in parallel with ordered
//! output.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use harmonious::{colour_any, complete_multigraph, construct_multigraph, expected_ht, verify, Mode, Multigraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub struct Config {
    pub max_n: usize,
    pub max_lambda: u32,
    pub samples: u32,
    pub seed: u64,
    pub threads: usize,
}

pub struct Line {
    pub n: usize,
    pub lambda: u32,
    pub colours: usize,
    pub expected: u64,
    pub ok: bool,
    pub detail: String,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} λ={} colours={} expected={} {}",
            self.n,
            self.lambda,
            self.colours,
            self.expected,
            if self.ok { "ok" } else { "FAIL" }
        )?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// A random sub-multigraph of `λK_n`: each pair gets a multiplicity drawn
/// uniformly from `0..=λ`.
fn random_submultigraph(n: usize, lambda: u32, rng: &mut StdRng) -> Multigraph {
    let mut triples = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let m = rng.gen_range(0..=lambda);
            if m > 0 {
                triples.push((u, v, m));
            }
        }
    }
    Multigraph::new(n, triples).expect("pairs are distinct and in range")
}

fn check(n: usize, lambda: u32, cfg: &Config) -> Line {
    let expected = expected_ht(n as u64, lambda as u64);
    let mut line = Line {
        n,
        lambda,
        colours: 0,
        expected,
        ok: false,
        detail: String::new(),
    };
    let built = construct_multigraph(n, lambda).and_then(|c| {
        let g = complete_multigraph(n, lambda)?;
        Ok((verify(&g, &c, Mode::FirstViolation)?, c))
    });
    let (report, c) = match built {
        Ok(x) => x,
        Err(e) => {
            line.detail = e.to_string();
            return line;
        }
    };
    line.colours = c.palette.len();
    if !report.harmonious {
        line.detail = format!("violation: {:?}", report.violations.first());
        return line;
    }
    if line.colours as u64 != expected {
        line.detail = "wrong colour count".into();
        return line;
    }

    let mut rng = StdRng::seed_from_u64(cfg.seed ^ ((n as u64) << 32) ^ lambda as u64);
    for s in 0..cfg.samples {
        let g = random_submultigraph(n, lambda, &mut rng);
        let result = colour_any(&g).and_then(|c| Ok((verify(&g, &c, Mode::FirstViolation)?, c)));
        match result {
            Ok((r, c)) if r.harmonious && c.colours_used() as u64 <= expected => {}
            Ok(_) => {
                line.detail = format!("sample {s} failed");
                return line;
            }
            Err(e) => {
                line.detail = format!("sample {s}: {e}");
                return line;
            }
        }
    }
    line.ok = true;
    line
}

pub fn run(cfg: &Config) -> Vec<Line> {
    let cases: Vec<(usize, u32)> = (1..=cfg.max_lambda)
        .flat_map(|l| (1..=cfg.max_n).map(move |n| (n, l)))
        .collect();
    let slots: Vec<Mutex<Option<Line>>> = cases.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..cfg.threads.min(cases.len()).max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, l)) = cases.get(i) else { break };
                *slots[i].lock().unwrap() = Some(check(n, l, cfg));
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every case is checked"))
        .collect()
}
