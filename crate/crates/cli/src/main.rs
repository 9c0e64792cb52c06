use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let threads = std::env::var("FUSION_THREADS").ok();
    let code = gkdim_cli::run(std::env::args_os(), threads.as_deref(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
