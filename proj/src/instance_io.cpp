#include "comax/oracle/instance_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "comax/errors.hpp"

namespace comax {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Eigen::MatrixXd matrix_from_rows(const std::vector<std::vector<double>>& rows,
                                 const std::string& what) {
    if (rows.empty()) throw InvalidInput(what + ": no rows");
    const size_t cols = rows.front().size();
    if (cols == 0) throw InvalidInput(what + ": empty row");
    Eigen::MatrixXd m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput(what + ": ragged rows");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

Eigen::MatrixXd load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r,") == std::string::npos;
        if (blank) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InvalidInput(path + ": bad number '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return matrix_from_rows(rows, path);
}

void save_matrix_csv(const std::string& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out.precision(17);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << m(i, j);
        }
        out << "\n";
    }
}

SpcaInstance load_instance(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    SpcaInstance inst;
    if (doc.contains("A")) {
        std::vector<std::vector<double>> rows =
            doc.at("A").get<std::vector<std::vector<double>>>();
        inst.a = matrix_from_rows(rows, path);
    } else if (doc.contains("A_csv")) {
        std::filesystem::path csv = doc.at("A_csv").get<std::string>();
        if (csv.is_relative()) csv = std::filesystem::path(path).parent_path() / csv;
        inst.a = load_matrix_csv(csv.string());
    } else {
        throw InvalidInput(path + ": missing factor matrix (A or A_csv)");
    }
    inst.s = doc.value("s", static_cast<int>(inst.a.cols()));
    inst.d = doc.value("d", 1);
    if (doc.contains("s_vec")) inst.s_vec = doc.at("s_vec").get<std::vector<int>>();
    if (doc.contains("a_lin")) {
        std::vector<double> lin = doc.at("a_lin").get<std::vector<double>>();
        inst.a_lin = Eigen::Map<Eigen::VectorXd>(lin.data(), lin.size());
    }
    inst.validate();
    return inst;
}

void save_instance(const std::string& path, const SpcaInstance& inst) {
    inst.validate();
    json doc;
    std::vector<std::vector<double>> rows(inst.a.rows());
    for (int i = 0; i < inst.a.rows(); ++i)
        for (int j = 0; j < inst.a.cols(); ++j) rows[i].push_back(inst.a(i, j));
    doc["A"] = rows;
    doc["s"] = inst.s;
    doc["d"] = inst.d;
    if (!inst.s_vec.empty()) doc["s_vec"] = inst.s_vec;
    if (inst.a_lin.size() > 0)
        doc["a_lin"] = std::vector<double>(inst.a_lin.data(),
                                           inst.a_lin.data() + inst.a_lin.size());
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << doc.dump(2) << "\n";
}

} // namespace comax
