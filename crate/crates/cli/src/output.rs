use serde_json::{json, Map, Value};

use rainbow_core::{CycleRecord, LabeledFlipCycle, RainbowReport, RecordFamily};

use crate::{Failure, Global, Status};

/// JSON view of a verifier report. Multiplicities become a list since
/// labels are not string keys.
pub fn report_json(report: &RainbowReport) -> Value {
    let counts: Vec<Value> = report
        .multiplicity_by_label
        .iter()
        .map(|(l, c)| json!([l, c]))
        .collect();
    json!({
        "rainbow": report.is_rainbow_r,
        "multiplicities": counts,
        "violations": report.violations,
    })
}

pub fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

/// Re-checks the cycle through its record, then prints it in the selected
/// format. `extras` are added as top-level JSON fields and as text lines.
pub fn emit_cycle<F: RecordFamily>(
    g: &Global,
    family: &F,
    cycle: &LabeledFlipCycle<F::State>,
    r: usize,
    extras: Vec<(&str, Value)>,
) -> Result<Status, Failure> {
    let record = CycleRecord::new(family, cycle, r);
    let report = record.verify()?;
    if !report.is_rainbow_r {
        eprintln!("verification failed with {} violation(s):", report.violations.len());
        for v in report.violations.iter().take(10) {
            eprintln!("  {v:?}");
        }
    }
    if g.dot {
        print!("{}", record.to_dot());
    } else if g.json {
        let mut obj: Map<String, Value> = match serde_json::to_value(&record).expect("records serialize") {
            Value::Object(o) => o,
            _ => unreachable!("records are objects"),
        };
        for (k, v) in extras {
            obj.insert(k.to_string(), v);
        }
        obj.insert("rainbow".into(), Value::Bool(report.is_rainbow_r));
        print_json(&Value::Object(obj));
    } else {
        println!("family: {}", record.family.name());
        println!(
            "params: {}",
            serde_json::to_string(&record.params).expect("params serialize")
        );
        for (k, v) in extras {
            println!("{k}: {v}");
        }
        println!("r: {r}");
        println!("length: {}", record.states.len());
        println!("rainbow: {}", if report.is_rainbow_r { "verified" } else { "REJECTED" });
        for (i, (s, labels)) in record.states.iter().zip(&record.labels).enumerate() {
            let text: Vec<String> = labels.iter().map(ToString::to_string).collect();
            println!("{i:>5}  {s}  -> {}", text.join(" "));
        }
    }
    Ok(if report.is_rainbow_r {
        Status::Ok
    } else {
        Status::Rejected
    })
}
