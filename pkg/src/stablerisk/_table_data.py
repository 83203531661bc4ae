"""Quantiles of the standard S1 stable law (generated, do not edit)."""

# generated by scripts/build_quantile_table.py
ALPHAS = [1.05, 1.1, 1.15, 1.2, 1.25, 1.3, 1.35, 1.4, 1.45, 1.5, 1.55, 1.6, 1.65, 1.7, 1.75, 1.8, 1.85, 1.9, 1.95, 2.0]
BETAS = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
LEVELS = [0.05, 0.25, 0.5, 0.75, 0.95]
# QUANTILES[i][j][k]: alpha ALPHAS[i], beta BETAS[j], level LEVELS[k]
QUANTILES = [
    [
        [-5.68327470766, -0.993809579855, 0, 0.993809579855, 5.68327470766],
        [-6.34266040295, -2.17154415469, -1.23348694388, -0.172686541224, 5.03352098214],
        [-7.01381001188, -3.36145367258, -2.46511896903, -1.32909652069, 4.39184082193],
        [-7.69976793737, -4.56368869989, -3.69345340104, -2.47652296048, 3.75705608174],
        [-8.40513602914, -5.77696296068, -4.91759715914, -3.61593646279, 3.12825156069],
        [-9.13744870654, -6.99861188226, -6.13711410329, -4.74816695955, 2.50470019373],
        [-9.91064955598, -8.22553773113, -7.35187129626, -5.87391858124, 1.8858133912],
        [-10.7560851946, -9.45508836005, -8.56191354786, -6.99378941573, 1.27110695117],
        [-11.7320840435, -10.6853395312, -9.76738114106, -8.10829001922, 0.660176988704],
        [-12.8312428026, -11.9150072565, -10.9684606426, -9.21785908135, 0.0526825876886],
        [-13.9931531091, -13.1432713382, -12.1653568013, -10.3228761872, -0.55166303589],
    ],
    [
        [-5.16464608437, -0.988852331566, 0, 0.988852331566, 5.16464608437],
        [-5.26983723775, -1.53547474977, -0.59459775311, 0.451860453297, 5.06639599768],
        [-5.3838049657, -2.09233925368, -1.18775028452, -0.0763799241038, 4.97377813506],
        [-5.50924213854, -2.6593812479, -1.7782834426, -0.59677292051, 4.88582564295],
        [-5.65034351663, -3.23550305517, -2.36541045622, -1.11014734822, 4.80180365221],
        [-5.81421710637, -3.81868824543, -2.94869706218, -1.61722899735, 4.72114032454],
        [-6.01451723004, -4.40659469654, -3.52796556144, -2.11864246768, 4.64338180135],
        [-6.28117090195, -4.99712190823, -4.10320255102, -2.61492278514, 4.56816173785],
        [-6.65509859015, -5.58865022823, -4.67449118915, -3.10652886965, 4.49518009122],
        [-7.1239764766, -6.18003204085, -5.2419669974, -3.5938560115, 4.4241879784],
        [-7.64627021727, -6.77049220314, -5.80579068502, -4.07724655265, 4.35497662947],
    ],
    [
        [-4.73256771884, -0.984838895545, 0, 0.984838895545, 4.73256771884],
        [-4.69323888697, -1.32388140366, -0.380387628423, 0.653985657689, 4.77701650781],
        [-4.66066567891, -1.67148024183, -0.759652313801, 0.330681815855, 4.82544804391],
        [-4.6373128331, -2.02745974185, -1.13684849727, 0.0142120795063, 4.87704237829],
        [-4.62713112329, -2.39091867768, -1.51129922249, -0.296112116709, 4.93119076181],
        [-4.6370162506, -2.76033938681, -1.8825918266, -0.600912476585, 4.98743023715],
        [-4.68042519482, -3.13395615591, -2.25052277072, -0.900734597998, 5.0454015537],
        [-4.78382330301, -3.51012054164, -2.61503385394, -1.19605176968, 5.10482111793],
        [-4.97286947584, -3.88749077531, -2.9761595535, -1.4872732577, 5.1654617339],
        [-5.23550318896, -4.26506195465, -3.33398941984, -1.77475337908, 5.22713903779],
        [-5.5434618092, -4.64211862746, -3.6886431618, -2.05879991973, 5.28970172956],
    ],
    [
        [-4.36867543084, -0.981537200396, 0, 0.981537200396, 4.36867543084],
        [-4.27970655859, -1.21836017165, -0.272504925503, 0.751620362633, 4.46156475513],
        [-4.19617110853, -1.46228507342, -0.54414071444, 0.528166438174, 4.55734740879],
        [-4.12040442244, -1.71309365838, -0.814153584502, 0.310631086557, 4.65530012639],
        [-4.05623813467, -1.97006626636, -1.08197306374, 0.0984599992204, 4.7548984866],
        [-4.01046899613, -2.23206721398, -1.34722162664, -0.108866152421, 4.85575306008],
        [-3.9959884098, -2.49777152651, -1.60968630059, -0.31181465754, 4.95756888497],
        [-4.03395205471, -2.76589858622, -1.86927744861, -0.510797869775, 5.06011881381],
        [-4.13891069763, -3.03535469424, -2.12599021471, -0.706176585497, 5.16322544773],
        [-4.3011743214, -3.30527786237, -2.37987428971, -0.898265695185, 5.26674857132],
        [-4.50170430107, -3.57502312956, -2.63101228247, -1.08734024146, 5.37057621609],
    ],
    [
        [-4.05941924525, -0.978764368319, 3.08032512191e-06, 0.978764368319, 4.05941924525],
        [-3.95459416019, -1.15518629893, -0.207251520671, 0.808116595562, 4.1674202605],
        [-3.85439613184, -1.33746636096, -0.413833923487, 0.642952210865, 4.27763116319],
        [-3.7611047445, -1.52538460349, -0.619152485338, 0.482873825696, 4.38938554639],
        [-3.67850316055, -1.71837873037, -0.822735565397, 0.327450634424, 4.50221044899],
        [-3.61322784084, -1.9156046779, -1.02424880789, 0.176261444283, 4.61576242188],
        [-3.57682134521, -2.11607473202, -1.22348302631, 0.0289156554893, 4.72978738033],
        [-3.58452334193, -2.31880533053, -1.42032958652, -0.114938968661, 4.84409448359],
        [-3.64396468301, -2.52291991803, -1.61475395375, -0.255615501023, 4.95853862177],
        [-3.74816204134, -2.72769455605, -1.80677280343, -0.393390315915, 5.07300836674],
        [-3.88444918848, -2.93256164983, -1.99643629157, -0.528506823626, 5.18741749513],
    ],
    [
        [-3.79466740803, -0.976378940326, 0, 0.976378940326, 3.79466740803],
        [-3.68845533571, -1.11310012985, -0.163375423161, 0.844442723701, 3.90364938049],
        [-3.58644572951, -1.25462273532, -0.326239342697, 0.717112510763, 4.01445852322],
        [-3.49090141448, -1.40074686026, -0.488127708471, 0.594110876384, 4.12645382154],
        [-3.40554029148, -1.55104132901, -0.648657672315, 0.475115696765, 4.23918766472],
        [-3.33655913851, -1.70488408786, -0.807541580788, 0.359796730775, 4.35234075296],
        [-3.29337631334, -1.86154526489, -0.964583865256, 0.247836858678, 4.46568142952],
        [-3.28602653869, -2.02027925097, -1.11966776059, 0.13894254219, 4.57903939805],
        [-3.31832840689, -2.18039608125, -1.27273844107, 0.0328476860776, 4.69228823246],
        [-3.38560172572, -2.34130105995, -1.42378679392, -0.0706861529844, 4.80533343906],
        [-3.47955847897, -2.50250703317, -1.57283575794, -0.171871382456, 4.9181041269],
    ],
    [
        [-3.56676242326, -0.974273414787, 0, 0.974273414787, 3.56676242326],
        [-3.46596872256, -1.08298533526, -0.131754809937, 0.869489645361, 3.67016920003],
        [-3.36922072968, -1.19560512327, -0.263122169851, 0.76853273164, 3.77524508994],
        [-3.27875056255, -1.31196250332, -0.393744465159, 0.671218356736, 3.88135130127],
        [-3.1980806869, -1.43173267156, -0.523316600551, 0.577315672644, 3.98804537745],
        [-3.13257150877, -1.55446201856, -0.651597735843, 0.486575454016, 4.09501493939],
        [-3.08919861946, -1.67961725456, -0.778412516389, 0.398748879766, 4.20203609863],
        [-3.07414807754, -1.80664164481, -0.90364493309, 0.313598577855, 4.30894657391],
        [-3.08932015329, -1.93500268806, -1.02722848517, 0.230904224345, 4.41562783959],
        [-3.13175662816, -2.06422327554, -1.14913550329, 0.150464685972, 4.52199298464],
        [-3.1961536343, -2.1938962736, -1.26936732148, 0.0720981421624, 4.62797827892],
    ],
    [
        [-3.36986050644, -0.97236740321, 0, 0.97236740321, 3.36986050644],
        [-3.2778114706, -1.06028483339, -0.107818554926, 0.887641715272, 3.46453366367],
        [-3.18980186537, -1.15135712908, -0.215347048237, 0.806057468692, 3.56088020826],
        [-3.10795321748, -1.24544595835, -0.322313829828, 0.727499101965, 3.65825113477],
        [-3.03538291985, -1.34231109141, -0.428480439925, 0.651808842594, 3.75619562046],
        [-2.9763194472, -1.44162612706, -0.533650539253, 0.578806537588, 3.85439554802],
        [-2.93551066878, -1.54300692765, -0.637672728174, 0.508304524167, 3.95262352916],
        [-2.91662162032, -1.64604510631, -0.740438489257, 0.440117628486, 4.05071544658],
        [-2.92064297973, -1.75033862507, -0.841877092221, 0.374069225059, 4.14855210425],
        [-2.9458102852, -1.85551447172, -0.9419491677, 0.309994460047, 4.24604670901],
        [-2.98882863382, -1.96124206728, -1.04064017407, 0.247741592696, 4.34313616565],
    ],
    [
        [-3.19944461273, -0.970601671526, 0, 0.970601671526, 3.19944461273],
        [-3.11771071965, -1.04247049967, -0.0890193712824, 0.901296018286, 3.28389326813],
        [-3.04003069109, -1.11686135738, -0.177824804579, 0.834534571985, 3.37011991561],
        [-2.96828922751, -1.19366619789, -0.26621345421, 0.770250021011, 3.45746843286],
        [-2.90501262873, -1.27271089843, -0.354002875725, 0.708340299189, 3.54547543943],
        [-2.85324765678, -1.35376449648, -0.441037339307, 0.648681442034, 3.6338103008],
        [-2.81602322644, -1.43655519763, -0.527190783015, 0.591138251131, 3.72223479573],
        [-2.79547475933, -1.52078969536, -0.612366791628, 0.535572300955, 3.81057591858],
        [-2.79217150797, -1.6061719665, -0.696496413448, 0.481847459391, 3.89870733667],
        [-2.80513172227, -1.69241867119, -0.779534714241, 0.42983338192, 3.98653656927],
        [-2.83238837261, -1.77926983112, -0.861456829553, 0.379407496192, 4.07399599025],
    ],
    [
        [-3.05194097324, -0.968933181714, 0, 0.968933181714, 3.05194097324],
        [-2.98109265736, -1.02802970549, -0.0738227841741, 0.911866735564, 3.12557675358],
        [-2.91421033678, -1.08911782033, -0.147490740651, 0.856828991601, 3.20112487265],
        [-2.85282703018, -1.15211615962, -0.22085552173, 0.803784660934, 3.2779449885],
        [-2.79880886166, -1.21690143901, -0.293780901377, 0.752672011918, 3.35557010098],
        [-2.75418584118, -1.28331364859, -0.366146957687, 0.703410551316, 3.43365879018],
        [-2.72080458137, -1.3511647488, -0.437852518198, 0.655907981405, 3.51196024895],
        [-2.69990901078, -1.42024938383, -0.508815930878, 0.610065940451, 3.59028929191],
        [-2.69186657608, -1.49035586564, -0.578974464846, 0.565784395178, 3.66850860885],
        [-2.69618248844, -1.56127593931, -0.648282753129, 0.522964782675, 3.74651612991],
        [-2.71174466582, -1.63281240926, -0.716710685455, 0.481512108276, 3.82423596579],
    ],
    [
        [-2.92440683771, -0.967331109167, 0, 0.967331109167, 2.92440683771],
        [-2.86436313575, -1.01600388387, -0.061247349151, 0.920239197458, 2.98720435879],
        [-2.8080188938, -1.0662250634, -0.122385333939, 0.87473526632, 3.05200193762],
        [-2.75650731991, -1.11793562013, -0.183308228242, 0.830803898399, 3.11821494181],
        [-2.7110928443, -1.17105069452, -0.243917209693, 0.788410950548, 3.18539650347],
        [-2.67304493437, -1.22546236891, -0.304122956645, 0.747507768944, 3.25320728057],
        [-2.64345520745, -1.28104417934, -0.363847408545, 0.708035312314, 3.32139003977],
        [-2.62305408119, -1.33765676758, -0.423024660944, 0.669927845197, 3.38974965256],
        [-2.6121004582, -1.39515393422, -0.481601081919, 0.633116025343, 3.45813785925],
        [-2.61038436816, -1.45338839324, -0.539534808893, 0.597529338663, 3.52644183994],
        [-2.61732414228, -1.51221670443, -0.596794811594, 0.563097920248, 3.59457568662],
    ],
    [
        [-2.81429280615, -0.965773727223, 0, 0.965773727223, 2.81429280615],
        [-2.76451691443, -1.00575738511, -0.0506345798974, 0.926995137939, 2.86663329023],
        [-2.71799124371, -1.04692081361, -0.101194294957, 0.889431573912, 2.92095118081],
        [-2.67547857028, -1.08922293234, -0.151606220276, 0.853078867204, 2.97676031068],
        [-2.63777255641, -1.13260734572, -0.201801156664, 0.817920506685, 3.03366715008],
        [-2.60562701059, -1.17700373524, -0.251715132845, 0.783929743564, 3.09135769471],
        [-2.57967231306, -1.22233006509, -0.30129053766, 0.751071795272, 3.14958352613],
        [-2.56034037974, -1.26849538051, -0.350476846332, 0.719305966669, 3.20814902729],
        [-2.54782006924, -1.31540291368, -0.399230952163, 0.688587564786, 3.26690050687],
        [-2.54205407866, -1.36295320358, -0.447517151176, 0.658869538987, 3.3257173276],
        [-2.54277281415, -1.41104697719, -0.49530684881, 0.63010382381, 3.38450483995],
    ],
    [
        [-2.71929672958, -0.964246016719, 0, 0.964246016719, 2.71929672958],
        [-2.67895139765, -0.996852784075, -0.0415249101653, 0.932532759521, 2.76186804403],
        [-2.64128048035, -1.03033472603, -0.083000646285, 0.901722601349, 2.80625587888],
        [-2.60675375261, -1.06466463176, -0.124379000432, 0.871816857888, 2.8520989097],
        [-2.57583602751, -1.09980667207, -0.165613638963, 0.842809321293, 2.89908639589],
        [-2.54895445658, -1.13571704487, -0.206660901822, 0.814687201723, 2.9469561158],
        [-2.52646441536, -1.17234497225, -0.247480454738, 0.787432173911, 2.99548977681],
        [-2.50862051749, -1.2096339762, -0.28803577194, 0.761021450165, 3.04450737013],
        [-2.49555864188, -1.24752333564, -0.328294443307, 0.735428816254, 3.09386140924],
        [-2.48729202344, -1.28594961691, -0.368228314252, 0.710625584616, 3.14343157035],
        [-2.4837207302, -1.32484817496, -0.407813477487, 0.686581436923, 3.19311996827],
    ],
    [
        [-2.63730698101, -0.962737857524, 0, 0.962737857524, 2.63730698101],
        [-2.60539785969, -0.988979504053, -0.033586679214, 0.937134521404, 2.6710042572],
        [-2.57554115067, -1.01584716727, -0.0671428138211, 0.91217717626, 2.7062356883],
        [-2.54800183466, -1.04332391702, -0.100638297806, 0.887869048266, 2.74276438241],
        [-2.52303388075, -1.07138830958, -0.134043883196, 0.864209184214, 2.78037475109],
        [-2.50086736628, -1.1000146572, -0.167331562938, 0.841192817844, 2.81887442267],
        [-2.48169596505, -1.12917343363, -0.200474902875, 0.818811799857, 2.8580944079],
        [-2.46566647276, -1.15883179519, -0.233449312688, 0.797055064131, 2.89788806696],
        [-2.45287178827, -1.18895418887, -0.266232250192, 0.775909105178, 2.93812935414],
        [-2.44334816495, -1.21950301426, -0.298803357903, 0.755358445843, 2.97871070726],
        [-2.43707677511, -1.25043930478, -0.331144534731, 0.735386079115, 3.01954083926],
    ],
    [
        [-2.56640414963, -0.961242674466, 0, 0.961242674466, 2.56640414963],
        [-2.54190060428, -0.981910921848, -0.0265733955451, 0.941007284704, 2.59222561149],
        [-2.51885411325, -1.0030045279, -0.0531292489013, 0.921210065003, 2.6192262307],
        [-2.49740034216, -1.02451380967, -0.0796501926736, 0.901854183871, 2.64727088795],
        [-2.4776672546, -1.04642695013, -0.106119203787, 0.882940749193, 2.67623066297],
        [-2.45977079884, -1.06873009553, -0.132519762803, 0.86446892637, 2.70598466948],
        [-2.44381085937, -1.0914074978, -0.158835998687, 0.846436084354, 2.73642121432],
        [-2.42986782297, -1.11444169731, -0.185052815542, 0.828837962172, 2.76743837427],
        [-2.41800005544, -1.13781373934, -0.211155998798, 0.811668848587, 2.79894410571],
        [-2.40824248332, -1.16150341611, -0.2371322994, 0.794921768011, 2.83085600437],
        [-2.40060634659, -1.1854895254, -0.262969495569, 0.778588666568, 2.86310082248],
    ],
    [
        [-2.50488148079, -0.959756431402, 0, 0.959756431402, 2.50488148079],
        [-2.48680227492, -0.975477511228, -0.0202968991367, 0.944307084293, 2.52383599469],
        [-2.46966219966, -0.991466301109, -0.040584828744, 0.929132606287, 2.54360069635],
        [-2.45352260934, -1.00771789618, -0.0608548767094, 0.914235255243, 2.5641102587],
        [-2.43844118745, -1.02422652566, -0.0810982446476, 0.89961642933, 2.58530012247],
        [-2.42447076722, -1.04098558131, -0.101306302043, 0.885276695952, 2.60710732983],
        [-2.41165823407, -1.05798765771, -0.121470637244, 0.871215829481, 2.62947120492],
        [-2.40004356641, -1.07522460362, -0.14158310445, 0.857432856421, 2.65233387963],
        [-2.38965906383, -1.09268758318, -0.161635865976, 0.843926106482, 2.67564067201],
        [-2.38052879973, -1.11036714563, -0.181621429248, 0.830693268054, 2.69934033078],
        [-2.37266831978, -1.12825330189, -0.201532678151, 0.817731446604, 2.72338516341],
    ],
    [
        [-2.45125748651, -0.958276888607, 0, 0.958276888607, 2.45125748651],
        [-2.43872030538, -0.969549420315, -0.0146098601328, 0.947154988607, 2.46429766013],
        [-2.42671011158, -0.98097081128, -0.0292159167647, 0.936185213106, 2.47781609118],
        [-2.41524991221, -0.992539011028, -0.0438143802056, 0.925368775731, 2.49178754805],
        [-2.40436148104, -1.00425169486, -0.0584014882364, 0.914706613481, 2.50618653688],
        [-2.39406512122, -1.01610626979, -0.0729735194734, 0.904199391207, 2.52098752194],
        [-2.38437944263, -1.02809988266, -0.0875268062938, 0.893847507896, 2.53616512842],
        [-2.37532115975, -1.04022943024, -0.102057747195, 0.883651104603, 2.55169432487],
        [-2.36690491577, -1.05249157133, -0.116562818465, 0.873610073856, 2.56755058351],
        [-2.35914313726, -1.06488274059, -0.131038585065, 0.86372407033, 2.58371001751],
        [-2.35204592319, -1.07739916402, -0.145481710623, 0.853992522616, 2.60014949523],
    ],
    [
        [-2.40427221861, -0.956803057547, 6.33409941188e-09, 0.956803057547, 2.40427221861],
        [-2.39651480123, -0.964024801138, -0.00939395882966, 0.949647615258, 2.41225573126],
        [-2.38898982954, -0.97131229807, -0.0187867772246, 0.942558966671, 2.4204587979],
        [-2.38170343449, -0.978664945113, -0.0281773166149, 0.935537548524, 2.42887471527],
        [-2.37466149946, -0.98608208426, -0.0375644421506, 0.928583741973, 2.43749664703],
        [-2.36786963318, -0.993563003394, -0.0469470245398, 0.921697872862, 2.44631765232],
        [-2.36133314372, -1.00110693716, -0.0563239418589, 0.91488021216, 2.45533071376],
        [-2.35505701407, -1.00871306804, -0.065694081328, 0.908130976579, 2.46452876462],
        [-2.34904587943, -1.01638052754, -0.0750563410424, 0.901450329341, 2.47390471497],
        [-2.34330400657, -1.02410839768, -0.0844096316527, 0.894838381107, 2.48345147654],
        [-2.3378352754, -1.03189571252, -0.0937528779865, 0.888295191045, 2.49316198631],
    ],
    [
        [-2.36286993313, -0.955334802695, -1.36164832138e-08, 0.955334802695, 2.36286993313],
        [-2.35925291895, -0.958821748703, -0.00455161875213, 0.951864357301, 2.36654379541],
        [-2.35569346744, -0.962325123804, -0.00910309222051, 0.948410480515, 2.37027377739],
        [-2.35219227855, -0.965844852967, -0.0136542751819, 0.944973236796, 2.37405913767],
        [-2.34875003684, -0.969380857659, -0.0182050225339, 0.941552687067, 2.37789912258],
        [-2.34536741072, -0.972933055868, -0.0227551893551, 0.938148888708, 2.38179296707],
        [-2.34204505173, -0.976501362118, -0.0273046309653, 0.93476189556, 2.38573989548],
        [-2.33878359378, -0.980085687499, -0.031853202985, 0.931391757926, 2.38973912238],
        [-2.33558365247, -0.983685939688, -0.0364007613951, 0.92803852258, 2.3937898534],
        [-2.3324458244, -0.987302022986, -0.0409471625953, 0.924702232773, 2.39789128599],
        [-2.32937068654, -0.990933838341, -0.0454922634633, 0.921382928251, 2.40204261033],
    ],
    [
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
        [-2.32617430735, -0.953872552409, 0, 0.953872552409, 2.32617430735],
    ],
]
