use std::fmt::Write as _;
use std::time::{Duration, Instant};

use oddmatch_core::format::{Answer, Problem, Solution, WitnessRecord};

/// Outcome of one `solve` run: the solution text plus `#` parameter lines and
/// `#t` timing lines.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub problem: Problem,
    pub answer: Answer,
    /// Non-empty only for YES.
    pub witness: Vec<WitnessRecord>,
    /// Parameters in the order they were recorded.
    pub params: Vec<(String, String)>,
    pub timings: Vec<(String, Duration)>,
}

impl RunReport {
    pub fn new(problem: Problem) -> Self {
        RunReport {
            problem,
            answer: Answer::No,
            witness: Vec::new(),
            params: Vec::new(),
            timings: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Runs `f` and records its wall-clock time under `phase`.
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((phase.to_string(), start.elapsed()));
        out
    }

    pub fn yes(&mut self, witness: Vec<WitnessRecord>) {
        self.answer = Answer::Yes;
        self.witness = witness;
    }

    pub fn no(&mut self) {
        self.answer = Answer::No;
        self.witness.clear();
    }

    pub fn solution(&self) -> Solution {
        Solution {
            answer: self.answer,
            witness: self.witness.clone(),
        }
    }

    /// 0 for YES, 1 for NO and PROBABLY_NO.
    pub fn exit_code(&self) -> u8 {
        if self.answer.is_yes() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        debug_assert!(self.answer.is_yes() || self.witness.is_empty());
        let mut out = self.solution().to_text();
        for (k, v) in &self.params {
            writeln!(out, "# {k} {v}").unwrap();
        }
        for (phase, d) in &self.timings {
            writeln!(out, "#t {phase} {:.6}s", d.as_secs_f64()).unwrap();
        }
        out
    }
}

/// `text` without its `#t` timing lines.
pub fn strip_timing(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("#t"))
        .fold(String::new(), |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout() {
        let mut r = RunReport::new(Problem::Bcpm);
        r.yes(vec![WitnessRecord::MatchingEdge(0), WitnessRecord::MatchingEdge(2)]);
        r.param("subproblems", 1);
        r.time("sweep", || ());
        let text = r.to_text();
        assert!(text.starts_with("YES\nm 0\nm 2\n# subproblems 1\n#t sweep "));
        assert_eq!(strip_timing(&text), "YES\nm 0\nm 2\n# subproblems 1\n");
        assert_eq!(r.exit_code(), 0);
    }
}
