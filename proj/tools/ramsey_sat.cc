// Standalone DIMACS front end to the embedded CDCL solver, speaking SAT-competition output.
#include <ramsey/cdcl.hh>
#include <ramsey/cnf.hh>
#include <ramsey/errors.hh>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char ** argv)
{
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " FILE.cnf\n";
        return 1;
    }

    std::ifstream in{argv[1]};
    if (! in) {
        std::cerr << "c cannot read " << argv[1] << "\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    ramsey::CnfInstance inst;
    try {
        inst = ramsey::parse_dimacs(text.str());
    }
    catch (const ramsey::Error & e) {
        std::cerr << "c " << e.what() << "\n";
        return 1;
    }

    ramsey::CdclSolver solver{inst.num_vars};
    for (auto & clause : inst.clauses)
        if (! solver.add_clause(clause))
            break;

    auto result = solver.solve();
    auto & stats = solver.stats();
    std::cout << "c conflicts " << stats.conflicts << " decisions " << stats.decisions << "\n";
    if (result == ramsey::CdclResult::unsat) {
        std::cout << "s UNSATISFIABLE\n";
        return 20;
    }
    if (result != ramsey::CdclResult::sat) {
        std::cout << "s UNKNOWN\n";
        return 0;
    }

    std::cout << "s SATISFIABLE\n";
    std::string line = "v";
    for (int v = 1; v <= inst.num_vars; ++v) {
        auto lit = std::to_string(solver.model_value(v) ? v : -v);
        if (line.size() + lit.size() + 1 > 78) {
            std::cout << line << "\n";
            line = "v";
        }
        line += " " + lit;
    }
    std::cout << line << " 0\n";
    return 10;
}
