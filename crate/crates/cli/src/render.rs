use mould::json::mould_to_json;
use mould::verify::Report;
use mould::Mould;

use crate::Format;

fn args(m: usize, var: &str, latex: bool) -> String {
    let names: Vec<String> = (1..=m)
        .map(|i| if latex { format!("{}_{{{}}}", var, i) } else { format!("{}{}", var, i) })
        .collect();
    names.join(", ")
}

pub fn mould(name: &str, m: &Mould, var: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let mut v = mould_to_json(m);
            v["name"] = name.into();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Plain => {
            let mut out = String::new();
            for (d, c) in m.components().iter().enumerate() {
                let lhs = if d == 0 { format!("{}^0", name) } else { format!("{}^{}({})", name, d, args(d, var, false)) };
                out.push_str(&format!("{} = {}\n", lhs, c.render(var)));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            let name = format!("\\mathrm{{{}}}", name.replace('_', "\\_"));
            let lines: Vec<String> = m
                .components()
                .iter()
                .enumerate()
                .map(|(d, c)| {
                    let lhs = if d == 0 {
                        format!("{}^{{0}}", name)
                    } else {
                        format!("{}^{{{}}}({})", name, d, args(d, var, true))
                    };
                    format!("{} &= {}", lhs, c.render_latex(var))
                })
                .collect();
            out.push_str(&lines.join(" \\\\\n"));
            out.push_str("\n\\end{align*}\n");
            out
        }
    }
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.to_json()).expect("json")),
        Format::Plain | Format::Latex => {
            let mut out = String::new();
            for c in &r.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{} {} [depth {}]\n", status, c.claim, c.depth));
                if let Some(res) = c.residual_text() {
                    out.push_str(&format!("    residual: {}\n", res));
                }
            }
            let ok = r.checks.iter().filter(|c| c.passed()).count();
            let verdict = if r.passed() { "pass" } else { "fail" };
            out.push_str(&format!("{}: {} ({}/{} checks)\n", r.claim, verdict, ok, r.checks.len()));
            out
        }
    }
}
