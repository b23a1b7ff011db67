// vlcris - indoor visible-light link simulator with a mirror-array reflector
// and a liquid-crystal receiver front end
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "vlcris/config.hpp"
#include "vlcris/csv.hpp"
#include "vlcris/scenario.hpp"

namespace
{

// Relative outputs land under VLCRIS_OUT_DIR when that variable is set.
std::string resolve_output(const std::string &path)
{
    const char *dir = std::getenv("VLCRIS_OUT_DIR");
    if (dir == nullptr || *dir == '\0')
        return path;
    std::filesystem::path p(path);
    if (p.is_absolute())
        return path;
    return (std::filesystem::path(dir) / p).string();
}

struct run_args
{
    std::string config_path;
    std::string out_path;
    std::string trace_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int trials = 0;
    bool trials_given = false;
};

int do_run(const run_args &args)
{
    vlcris::scenario_config cfg = vlcris::load_config(args.config_path);
    if (args.seed_given)
    {
        cfg.monte_carlo.seed = args.seed;
        cfg.optimizer.seed = args.seed;
    }
    if (args.trials_given)
        cfg.monte_carlo.trials = args.trials;
    if (!args.out_path.empty())
        cfg.output_path = args.out_path;

    bool want_trace = !args.trace_path.empty();
    vlcris::scenario_result res = vlcris::run_scenario(cfg, want_trace);
    std::string out = resolve_output(cfg.effective_output_path());
    vlcris::write_csv(res.to_table(cfg), out);
    std::printf("wrote %s\n", out.c_str());
    if (want_trace && cfg.kind != vlcris::scenario_kind::convergence_trace)
    {
        std::string tr = resolve_output(args.trace_path);
        vlcris::write_csv(vlcris::trace_table(res.trace), tr);
        std::printf("wrote %s\n", tr.c_str());
    }
    return 0;
}

int do_oracle(const std::string &config_path, const std::string &out_path)
{
    vlcris::scenario_config cfg = vlcris::load_config(config_path);
    if (!out_path.empty())
        cfg.output_path = out_path;
    vlcris::scenario_result res = vlcris::run_oracle(cfg);
    std::string out = resolve_output(cfg.output_path.empty()
                                         ? "oracle_" + cfg.effective_output_path()
                                         : cfg.effective_output_path());
    vlcris::write_csv(res.to_table(cfg), out);
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int do_validate(const std::string &config_path)
{
    vlcris::scenario_config cfg = vlcris::load_config(config_path);
    std::printf("ok: %s (%s)\n", config_path.c_str(), to_string(cfg.kind).c_str());
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"indoor visible-light link simulator with a mirror-array reflector "
                 "and a liquid-crystal receiver front end"};
    app.require_subcommand(1);

    run_args rargs;
    CLI::App *run = app.add_subcommand("run", "execute the configured experiment");
    run->add_option("config", rargs.config_path, "JSON scenario description")->required();
    auto *seed_opt = run->add_option("--seed", rargs.seed,
                                     "override both the sampling and optimizer seeds");
    auto *trials_opt = run->add_option("--trials", rargs.trials,
                                       "override the Monte Carlo trial count");
    run->add_option("--out", rargs.out_path, "output CSV path");
    run->add_option("--trace", rargs.trace_path,
                    "also write the first trial's optimizer trace CSV");

    std::string oracle_config;
    std::string oracle_out;
    CLI::App *oracle = app.add_subcommand("oracle", "exhaustive grid certification");
    oracle->add_option("config", oracle_config, "JSON scenario description")->required();
    oracle->add_option("--out", oracle_out, "output CSV path");

    std::string validate_config;
    CLI::App *validate = app.add_subcommand("validate", "parse and validate a config");
    validate->add_option("config", validate_config, "JSON scenario description")
        ->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        rargs.seed_given = seed_opt->count() > 0;
        rargs.trials_given = trials_opt->count() > 0;
        if (run->parsed())
            return do_run(rargs);
        if (oracle->parsed())
            return do_oracle(oracle_config, oracle_out);
        if (validate->parsed())
            return do_validate(validate_config);
    }
    catch (const vlcris::config_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
