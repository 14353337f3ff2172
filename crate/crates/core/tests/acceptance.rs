use std::process::ExitCode;

fn main() -> ExitCode {
    let reports = tlhom::repro::run_all();
    print!("{}", tlhom::repro::scoreboard(&reports));
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
