//! Plain-text tables for terminal output.

use std::io::{self, Write};

use crate::output::*;

pub trait Human {
    fn render(&self, out: &mut dyn Write) -> io::Result<()>;
}

/// Key/value rows with the keys padded to a common width.
struct Table(Vec<(String, String)>);

impl Table {
    fn new() -> Self {
        Table(Vec::new())
    }

    fn row(mut self, key: &str, value: impl ToString) -> Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    fn list(self, key: &str, items: &[String]) -> Self {
        if items.is_empty() {
            return self.row(key, "(none)");
        }
        let mut t = self.row(key, &items[0]);
        for item in &items[1..] {
            t = t.row("", item);
        }
        t
    }

    fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        let width = self
            .0
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        for (k, v) in &self.0 {
            let sep = if k.is_empty() { ' ' } else { ':' };
            writeln!(out, "{k:<width$}{sep} {v}")?;
        }
        Ok(())
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "n/a",
    }
}

impl Human for SemigroupOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        Table::new()
            .row("generators", join(self.generators.generators()))
            .row("embedding dimension", self.embedding_dimension)
            .row("multiplicity", self.multiplicity)
            .row("Frobenius number", self.frobenius)
            .row("genus", self.genus)
            .row("Apéry set", join(&self.apery))
            .row("symmetric", yes_no(self.symmetric))
            .write(out)
    }
}

impl Human for IdealOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut t = Table::new();
        if let Some(c) = &self.curve {
            t = t.row("curve", format!("({})", join(c)));
        }
        t = t
            .row("variables", self.variables.join(", "))
            .list("ideal", &self.ideal)
            .row(
                "order",
                format!(
                    "{} ({})",
                    self.order,
                    if self.local { "local" } else { "global" }
                ),
            )
            .list(
                if self.local {
                    "standard basis"
                } else {
                    "Gröbner basis"
                },
                &self.basis,
            )
            .row("leading monomials", self.leading_monomials.join(", "));
        if let Some(n) = self.minimal_generators {
            t = t.row("minimal generators", n);
        }
        if let Some(ci) = self.complete_intersection {
            t = t.row("complete intersection", yes_no(ci));
        }
        t.write(out)
    }
}

impl Human for TangentConeOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut t = Table::new()
            .row("curve", format!("({})", join(&self.curve)))
            .row("order", &self.order)
            .row("lowest variable", &self.lowest_variable)
            .list("standard basis", &self.standard_basis)
            .row("leading monomials", self.leading_monomials.join(", "))
            .list("tangent cone", &self.cone)
            .row("Cohen-Macaulay", yes_no(self.cohen_macaulay));
        if let (Some(w), Some(lm)) = (&self.witness, &self.witness_leading_monomial) {
            t = t.row("witness", format!("{w}  (leading monomial {lm})"));
        }
        t.write(out)
    }
}

impl Human for HilbertOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        Table::new()
            .row("curve", format!("({})", join(&self.curve)))
            .row("order", &self.order)
            .row("numerator", &self.numerator)
            .row("Hilbert series", &self.series)
            .row("Hilbert function", join(&self.hf_prefix))
            .row("multiplicity", self.multiplicity)
            .row(
                "non-decreasing",
                match self.first_violation {
                    None => "yes".to_string(),
                    Some(n) => format!("no (drops after degree {n})"),
                },
            )
            .write(out)
    }
}

impl Human for GlueOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        Table::new()
            .row("S1", join(self.s1.generators()))
            .row("S2", join(self.s2.generators()))
            .row("p, q", format!("{}, {}", self.p, self.q))
            .row("nice", yes_no(self.nice))
            .row(
                "b",
                format!(
                    "({}) with value {}",
                    join(&self.b.coefficients),
                    self.b.value
                ),
            )
            .row(
                "a",
                format!(
                    "({}) with value {}",
                    join(&self.a.coefficients),
                    self.a.value
                ),
            )
            .row("glued curve", format!("({})", join(&self.glued_generators)))
            .row("variables", self.variables.join(", "))
            .list("generators", &self.gluing_generators)
            .write(out)
    }
}

impl Human for VerifyOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        let g = &self.gluing;
        Table::new()
            .row("S1", join(g.s1.generators()))
            .row("S2", join(g.s2.generators()))
            .row("p, q", format!("{}, {}", g.p, g.q))
            .row("nice", yes_no(g.nice))
            .row("glued curve", format!("({})", join(&self.glued.generators)))
            .row("order", &self.glued.order)
            .list("standard basis", &self.glued.standard_basis)
            .row("C1 Cohen-Macaulay", yes_no(self.c1.cohen_macaulay))
            .row("C2 Cohen-Macaulay", yes_no(self.c2.cohen_macaulay))
            .row("glued Cohen-Macaulay", yes_no(self.glued.cohen_macaulay))
            .row("C1 HF non-decreasing", yes_no(self.c1.nondecreasing))
            .row("glued HF non-decreasing", yes_no(self.glued.nondecreasing))
            .row("glued h(t)", &self.glued.h)
            .row("glued HF", join(&self.glued.hf_prefix))
            .row("ideal agreement", yes_no(self.ideal_agreement))
            .row("smallest generator", opt_flag(self.smallest_generator_ok))
            .row(
                "CM transfer",
                transfer(self.cm_transfer_applicable, self.cm_transfer_confirmed),
            )
            .row(
                "monotone transfer",
                transfer(
                    self.monotone_transfer_applicable,
                    self.monotone_transfer_confirmed,
                ),
            )
            .row(
                "decomposition",
                opt_flag(self.decomposition.as_ref().map(|d| d.ok)),
            )
            .row("factorization", opt_flag(self.factorization_ok))
            .row("Gorenstein", yes_no(self.gorenstein))
            .row("complete intersection", yes_no(self.complete_intersection))
            .row("violations", {
                let v = self.violations();
                if v.is_empty() {
                    "none".to_string()
                } else {
                    v.join(", ")
                }
            })
            .write(out)
    }
}

fn transfer(applicable: bool, confirmed: bool) -> &'static str {
    match (applicable, confirmed) {
        (false, _) => "n/a",
        (true, true) => "confirmed",
        (true, false) => "FAILED",
    }
}

impl Human for ScanOut {
    fn render(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut t = Table::new()
            .row(
                "parameter",
                format!(
                    "{} in [{}, {}]",
                    self.parameter, self.range[0], self.range[1]
                ),
            )
            .row("verified", self.verified)
            .row("skipped", self.skipped)
            .row("Cohen-Macaulay", self.cohen_macaulay)
            .row("non-decreasing", self.nondecreasing)
            .row(
                "decreasing Gorenstein",
                if self.decreasing_gorenstein.is_empty() {
                    "none".to_string()
                } else {
                    join(&self.decreasing_gorenstein)
                },
            );
        if let Some(o) = &self.output {
            t = t.row("output", o);
        }
        t.write(out)?;
        if let Some(records) = &self.records {
            writeln!(out)?;
            writeln!(
                out,
                "{:>6} {:>6} {:>6}  {:<5} {:<4} {:<4}  h(t)",
                self.parameter, "p", "q", "nice", "CM", "HF"
            )?;
            for r in records {
                match r.verdicts() {
                    Some(v) => writeln!(
                        out,
                        "{:>6} {:>6} {:>6}  {:<5} {:<4} {:<4}  {}",
                        r.parameter,
                        r.p,
                        r.q,
                        yes_no(v.nice),
                        yes_no(v.glued_cm),
                        if v.glued_nondecreasing { "up" } else { "down" },
                        v.h
                    )?,
                    None => writeln!(out, "{:>6} {:>6} {:>6}  skipped", r.parameter, r.p, r.q)?,
                }
            }
        }
        Ok(())
    }
}
