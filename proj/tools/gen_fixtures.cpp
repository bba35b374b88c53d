#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "smashcalc/errors.hpp"
#include "smashcalc/scenario.hpp"

using namespace smashcalc;

int main(int argc, char** argv)
{
    CLI::App app{"Recompute the derived sections of fixture files"};
    std::vector<std::string> files;
    bool check = false;
    app.add_option("files", files, "fixture files")->required()->check(CLI::ExistingFile);
    app.add_flag("--check", check, "compare instead of rewriting; exit 1 on any difference");
    CLI11_PARSE(app, argc, argv);

    int status = 0;
    for (const auto& path : files) {
        try {
            json current = load_json_file(path);
            json fresh = regenerate_fixture(current);
            if (check) {
                bool same = fresh == current;
                std::cout << (same ? "ok    " : "STALE ") << path << "\n";
                if (!same)
                    status = 1;
                continue;
            }
            std::ofstream out(path);
            out << fresh.dump(2) << "\n";
            std::cout << "wrote " << path << "\n";
        } catch (const Error& e) {
            std::cerr << path << ": " << e.what() << "\n";
            status = 2;
        }
    }
    return status;
}
