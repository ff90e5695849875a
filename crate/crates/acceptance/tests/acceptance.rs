use std::process::ExitCode;

use bipoly_k3_acceptance::{criteria, verdict, TOLERANCE};

fn main() -> ExitCode {
    let criteria = criteria();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!(
            "criterion {:>2} {}: {} [{TOLERANCE}] {}",
            i + 1,
            name,
            verdict(o.pass),
            o.detail
        );
        for n in &o.notes {
            println!("    {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
