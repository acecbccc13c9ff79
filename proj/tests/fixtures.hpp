#pragma once

// Reference fixtures: the published 63-model selection table for the
// home-goal dataset (deviance, Pearson chi2, log-likelihood, residual df,
// AIC per candidate formula) and the 31-model order that survives the
// deviance screen at alpha = 0.05 sorted by AIC. Used as frozen inputs by
// the selection-pipeline tests; no fitting involved.

#include <string>
#include <vector>

#include "countreg/model_search.hpp"

namespace fixtures {

struct MetricsRow {
    const char* model;
    double deviance;
    double pearson_chi2;
    double llf;
    long df_resid;
    double aic;
};

inline const std::vector<MetricsRow>& all_models() {
    static const std::vector<MetricsRow> rows = {
        {"HTAG", 7234.792327, 6390.101744, -9278.392, 5850, 18560.784},
        {"logHST", 6222.33253, 5193.06051, -8772.1621, 5850, 17548.3242},
        {"logHC", 7241.81159, 6392.376432, -9281.90163, 5850, 18567.8033},
        {"HR", 7206.607732, 6349.947591, -9264.29971, 5850, 18532.5994},
        {"AR", 7189.915587, 6326.488155, -9255.95363, 5850, 18515.9073},
        {"HomeTeam", 6774.322707, 5927.101628, -9048.15719, 5826, 18148.3144},
        {"HTAG + logHST", 5991.588813, 5006.427081, -8656.79025, 5849, 17319.5805},
        {"HTAG + logHC", 7228.580545, 6382.811467, -9275.28611, 5849, 18556.5722},
        {"HTAG + HR", 7199.906632, 6346.400575, -9260.94916, 5849, 18527.8983},
        {"HTAG + AR", 7181.604664, 6321.500495, -9251.79817, 5849, 18509.5963},
        {"HTAG + HomeTeam", 6774.226187, 5927.150126, -9048.10893, 5825, 18150.2179},
        {"logHST + logHC", 5884.45854, 4905.019606, -8603.22511, 5849, 17212.4502},
        {"logHST + HR", 5981.051285, 4999.825831, -8651.52148, 5849, 17309.043},
        {"logHST + AR", 5976.32572, 4989.730312, -8649.1587, 5849, 17304.3174},
        {"logHST + HomeTeam", 5794.972454, 4861.503044, -8558.48207, 5825, 17170.9641},
        {"logHC + HR", 7202.165607, 6345.10234, -9262.07864, 5849, 18530.1573},
        {"logHC + AR", 7184.848102, 6320.275663, -9253.41989, 5849, 18512.8398},
        {"logHC + HomeTeam", 6772.555481, 5925.72631, -9047.27358, 5825, 18148.5472},
        {"HR + AR", 7146.205721, 6274.697767, -9234.0987, 5849, 18474.1974},
        {"HR + HomeTeam", 6744.566014, 5887.734599, -9033.27885, 5825, 18120.5577},
        {"AR + HomeTeam", 6723.647103, 5864.579973, -9022.81939, 5825, 18099.6388},
        {"HTAG + logHST + logHC", 5884.276723, 4905.221604, -8603.1342, 5848, 17214.2684},
        {"HTAG + logHST + HR", 5981.001162, 4999.831633, -8651.49642, 5848, 17310.9928},
        {"HTAG + logHST + AR", 5976.16023, 4989.718307, -8649.07595, 5848, 17306.1519},
        {"HTAG + logHST + HomeTeam", 5794.152405, 4860.793388, -8558.07204, 5824,
         17172.1441},
        {"HTAG + logHC + HR", 7195.610658, 6341.428238, -9258.80117, 5848, 18525.6023},
        {"HTAG + logHC + AR", 7176.774563, 6315.222943, -9249.38312, 5848, 18506.7662},
        {"HTAG + logHC + HomeTeam", 6772.461085, 5925.79146, -9047.22638, 5824, 18150.4528},
        {"HTAG + HR + AR", 7140.862976, 6271.984551, -9231.42733, 5848, 18470.8547},
        {"HTAG + HR + HomeTeam", 6744.534283, 5887.628172, -9033.26298, 5824, 18122.526},
        {"HTAG + AR + HomeTeam", 6723.629924, 5864.636893, -9022.8108, 5824, 18101.6216},
        {"logHST + logHC + HR", 5871.014882, 4896.454709, -8596.50328, 5848, 17201.0066},
        {"logHST + logHC + AR", 5868.2966, 4889.696454, -8595.14414, 5848, 17198.2883},
        {"logHST + logHC + HomeTeam", 5654.551142, 4739.117315, -8488.27141, 5824,
         17032.5428},
        {"logHST + HR + AR", 5963.481614, 4981.971641, -8642.73665, 5848, 17293.4733},
        {"logHST + HR + HomeTeam", 5786.463977, 4854.766729, -8554.22783, 5824, 17164.4557},
        {"logHST + AR + HomeTeam", 5779.462304, 4843.934353, -8550.72699, 5824, 17157.454},
        {"logHC + HR + AR", 7143.100066, 6270.844144, -9232.54587, 5848, 18473.0917},
        {"logHC + HR + HomeTeam", 6741.671522, 5885.079803, -9031.8316, 5824, 18119.6632},
        {"logHC + AR + HomeTeam", 6720.916371, 5862.947522, -9021.45402, 5824, 18098.908},
        {"HR + AR + HomeTeam", 6688.847894, 5820.817497, -9005.41979, 5824, 18066.8396},
        {"HTAG + logHST + logHC + HR", 5871.001939, 4896.516962, -8596.49681, 5847,
         17202.9936},
        {"HTAG + logHST + logHC + AR", 5868.190843, 4889.843636, -8595.09126, 5847,
         17200.1825},
        {"HTAG + logHST + logHC + HomeTeam", 5653.260661, 4737.546129, -8487.62617, 5823,
         17033.2523},
        {"HTAG + logHST + HR + AR", 5963.473689, 4981.971434, -8642.73268, 5847, 17295.4654},
        {"HTAG + logHST + HR + HomeTeam", 5785.105855, 4853.762116, -8553.54877, 5823,
         17165.0975},
        {"HTAG + logHST + AR + HomeTeam", 5778.422587, 4843.106596, -8550.20713, 5823,
         17158.4143},
        {"HTAG + logHC + HR + AR", 7137.855642, 6268.033498, -9229.92366, 5847, 18469.8473},
        {"HTAG + logHC + HR + HomeTeam", 6741.634064, 5884.948455, -9031.81287, 5823,
         18121.6257},
        {"HTAG + logHC + AR + HomeTeam", 6720.900516, 5863.011264, -9021.4461, 5823,
         18100.8922},
        {"HTAG + HR + AR + HomeTeam", 6688.673371, 5820.46121, -9005.33253, 5823, 18068.665},
        {"logHST + logHC + HR + AR", 5852.546375, 4879.897734, -8587.26903, 5847,
         17184.5381},
        {"logHST + logHC + HR + HomeTeam", 5643.550689, 4730.118554, -8482.77118, 5823,
         17023.5424},
        {"logHST + logHC + AR + HomeTeam", 5638.062487, 4723.044811, -8480.02708, 5823,
         17018.0542},
        {"logHST + HR + AR + HomeTeam", 5769.202072, 4835.984595, -8545.59688, 5823,
         17149.1938},
        {"logHC + HR + AR + HomeTeam", 6684.566879, 5817.641422, -9003.27928, 5823,
         18064.5586},
        {"HTAG + logHST + logHC + HR + AR", 5852.545665, 4879.884293, -8587.26867, 5846,
         17186.5373},
        {"HTAG + logHST + logHC + HR + HomeTeam", 5641.498093, 4727.977727, -8481.74489,
         5822, 17023.4898},
        {"HTAG + logHST + logHC + AR + HomeTeam", 5636.487104, 4721.301936, -8479.23939,
         5822, 17018.4788},
        {"HTAG + logHST + HR + AR + HomeTeam", 5767.472851, 4834.830337, -8544.73226, 5822,
         17149.4645},
        {"HTAG + logHC + HR + AR + HomeTeam", 6684.374122, 5817.22362, -9003.1829, 5822,
         18066.3658},
        {"logHST + logHC + HR + AR + HomeTeam", 5625.025529, 4712.701481, -8473.5086, 5822,
         17007.0172},
        {"HTAG + logHST + logHC + HR + AR + HomeTeam", 5622.496, 4710.341455, -8472.24384,
         5821, 17006.4877},
    };
    return rows;
}

struct SurvivorRow {
    const char* model;
    double p_chisq;
};

inline const std::vector<SurvivorRow>& surviving_models() {
    static const std::vector<SurvivorRow> rows = {
        {"HTAG + logHST + logHC + HR + AR + HomeTeam", 0.968193},
        {"logHST + logHC + HR + AR + HomeTeam", 0.967131},
        {"logHST + logHC + AR + HomeTeam", 0.957826},
        {"HTAG + logHST + logHC + AR + HomeTeam", 0.958328},
        {"HTAG + logHST + logHC + HR + HomeTeam", 0.953925},
        {"logHST + logHC + HR + HomeTeam", 0.95294},
        {"logHST + logHC + HomeTeam", 0.942872},
        {"HTAG + logHST + logHC + HomeTeam", 0.943201},
        {"logHST + HR + AR + HomeTeam", 0.689303},
        {"HTAG + logHST + HR + AR + HomeTeam", 0.691715},
        {"logHST + AR + HomeTeam", 0.658196},
        {"HTAG + logHST + AR + HomeTeam", 0.658345},
        {"logHST + HR + HomeTeam", 0.633961},
        {"HTAG + logHST + HR + HomeTeam", 0.635226},
        {"logHST + HomeTeam", 0.607381},
        {"HTAG + logHST + HomeTeam", 0.606747},
        {"logHST + logHC + HR + AR", 0.477098},
        {"HTAG + logHST + logHC + HR + AR", 0.473419},
        {"logHST + logHC + AR", 0.423237},
        {"HTAG + logHST + logHC + AR", 0.420003},
        {"logHST + logHC + HR", 0.413445},
        {"HTAG + logHST + logHC + HR", 0.409895},
        {"logHST + logHC", 0.369438},
        {"HTAG + logHST + logHC", 0.366587},
        {"logHST + HR + AR", 0.142982},
        {"HTAG + logHST + HR + AR", 0.140928},
        {"logHST + AR", 0.120008},
        {"HTAG + logHST + AR", 0.118474},
        {"logHST + HR", 0.111612},
        {"HTAG + logHST + HR", 0.109957},
        {"HTAG + logHST", 0.094434},
    };
    return rows;
}

inline countreg::SelectionTable metrics_as_table() {
    countreg::SelectionTable table;
    for (const auto& row : all_models()) {
        countreg::SelectionEntry entry;
        entry.model = row.model;
        entry.deviance = row.deviance;
        entry.pearson_chi2 = row.pearson_chi2;
        entry.llf = row.llf;
        entry.df_resid = row.df_resid;
        entry.aic = row.aic;
        table.push_back(std::move(entry));
    }
    return table;
}

} // namespace fixtures
