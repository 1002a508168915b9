"""Generated by scripts/gen_rs_coeffs.py; do not edit.

Chebyshev coefficients (argument 2p-1 on p in [0,1]) of the
Riemann-Siegel remainder functions C_0..C_10.
"""

import numpy as np

RS_CHEB = np.array([
    [np.float64(0.6426672862397681), np.float64(-2.0035033977996089e-16), np.float64(0.27197299999785546), np.float64(-6.188291960581652e-16), np.float64(0.010738605819340127), np.float64(-2.459593598973798e-16), np.float64(-0.0013743815296340803), np.float64(-2.549093274601915e-17), np.float64(-0.0001246822188033423), np.float64(-1.7202352277032936e-16), np.float64(-5.764599706249653e-07), np.float64(-7.497190817236052e-17), np.float64(2.728067428262743e-07), np.float64(-7.379628947778073e-17), np.float64(8.077953190803147e-09), np.float64(-1.538509092575353e-16), np.float64(-2.088457430914615e-10), np.float64(-2.2815406040248564e-16), np.float64(-1.3115261801220523e-11), np.float64(2.8825916233647376e-17), np.float64(-1.3992784610871885e-14), np.float64(-1.211557348082643e-16), np.float64(1.0734587210200282e-14), np.float64(-1.3868638953901094e-16), np.float64(5.035846678193747e-16), np.float64(1.0230900322819782e-16), np.float64(3.456554459009876e-16), np.float64(4.667600709286956e-17), np.float64(3.698814818845849e-16), np.float64(-1.6608123191708706e-16), np.float64(3.3246912251751076e-16)],
    [np.float64(-1.0119220276531038e-18), np.float64(0.01069791392100299), np.float64(1.3636608869503935e-17), np.float64(0.0171706512433779), np.float64(-5.056315548398903e-18), np.float64(0.0027932111497884515), np.float64(9.305054967373394e-18), np.float64(-3.637565371929725e-05), np.float64(-5.041415357237145e-18), np.float64(-2.710895523116468e-05), np.float64(1.3255886081851102e-17), np.float64(-1.0483749866795922e-06), np.float64(1.4854080738484805e-17), np.float64(5.8864671652179174e-08), np.float64(3.90959551184111e-18), np.float64(4.322967268681242e-09), np.float64(6.709599121180418e-18), np.float64(-1.1369596794376379e-11), np.float64(1.1039712600120276e-17), np.float64(-6.699822283902802e-12), np.float64(-3.2710259555911907e-18), np.float64(-1.0077581203107563e-13), np.float64(1.226634733346697e-18), np.float64(5.163723349145146e-15), np.float64(-3.2710259555911888e-18), np.float64(1.4269850731266558e-16), np.float64(-1.2266347333466955e-17), np.float64(2.2488303444689413e-17), np.float64(-7.359808400080175e-18), np.float64(2.1261668711342735e-17), np.float64(1.0630834355671366e-17)],
    [np.float64(0.0031461158539887487), np.float64(6.394113054182086e-16), np.float64(-0.0023087838845308414), np.float64(-5.883017720628252e-17), np.float64(5.769820766688769e-05), np.float64(3.819814776560671e-18), np.float64(0.00035238862023667016), np.float64(-4.047273169107461e-18), np.float64(2.524666745868341e-05), np.float64(-1.124838046341021e-18), np.float64(-3.4428211971938604e-06), np.float64(-2.294895743841066e-18), np.float64(-3.535074556608931e-07), np.float64(-2.026925370315714e-18), np.float64(3.730830183731369e-09), np.float64(-7.6071299231107e-20), np.float64(1.2776951853028248e-09), np.float64(9.793212932533993e-19), np.float64(2.187461614502514e-11), np.float64(-9.380441560269296e-19), np.float64(-1.914140612591029e-12), np.float64(6.905809802484086e-19), np.float64(-6.562939400398733e-14), np.float64(7.939984268424177e-19), np.float64(1.2600257911514214e-15), np.float64(-3.835230017511397e-19), np.float64(8.38713495401606e-17), np.float64(2.8829110594932094e-19), np.float64(3.165612033194207e-18), np.float64(1.816194037964664e-18), np.float64(3.478659439100396e-18)],
    [np.float64(9.245774583226852e-15), np.float64(7.123256217318886e-05), np.float64(4.688924841247729e-15), np.float64(0.00023234305298553115), np.float64(7.573312315746694e-16), np.float64(-0.00012929912045502818), np.float64(-4.845745012261593e-16), np.float64(1.8074496413760616e-05), np.float64(1.1413438793417737e-16), np.float64(6.526185187185802e-06), np.float64(-2.408243049597441e-17), np.float64(-1.1696365376915932e-07), np.float64(3.833117181297643e-18), np.float64(-7.349476127041401e-08), np.float64(-2.106964352473574e-19), np.float64(-1.775091006584427e-09), np.float64(-2.0728038664947749e-19), np.float64(2.555552959808273e-10), np.float64(7.666467083416858e-20), np.float64(1.1376636597253081e-11), np.float64(-3.5137974132327243e-20), np.float64(-3.34986061993332e-13), np.float64(-1.916616770854214e-20), np.float64(-2.5537155184203217e-14), np.float64(-3.1943612847570204e-20), np.float64(6.746011879214112e-17), np.float64(-1.8846731580066415e-19), np.float64(2.999026092194127e-17), np.float64(-2.363827350720195e-19), np.float64(4.599880250050111e-19), np.float64(1.7249550937687912e-19)],
    [np.float64(0.0001676574521482176), np.float64(1.4597352398381028e-12), np.float64(-0.00022728768958438323), np.float64(-1.5269344006851303e-13), np.float64(6.477387185336001e-05), np.float64(1.1387192056316649e-14), np.float64(-8.492200481745636e-06), np.float64(-3.099328058207727e-15), np.float64(-2.6161407288617275e-06), np.float64(1.252754948247162e-15), np.float64(8.33676497797953e-07), np.float64(-5.986280437694109e-16), np.float64(6.32470402294456e-08), np.float64(1.9483199018860726e-16), np.float64(-1.0059949394035388e-08), np.float64(-4.016104851616958e-17), np.float64(-7.822677179132144e-10), np.float64(4.535369125666545e-18), np.float64(3.1676582019387574e-11), np.float64(-1.135495612940973e-21), np.float64(3.5006945894050813e-12), np.float64(-2.1686718409795718e-20), np.float64(-1.431488279027138e-14), np.float64(1.0366700606938028e-19), np.float64(-7.269440218805769e-15), np.float64(-6.937753415331652e-20), np.float64(-8.758469470990048e-17), np.float64(-8.495004541650697e-20), np.float64(8.356998151770183e-18), np.float64(2.511192220927151e-19), np.float64(4.185611520933184e-19)],
    [np.float64(7.059706932869535e-12), np.float64(8.82884164451291e-05), np.float64(3.00884584280692e-12), np.float64(-1.5628681049961208e-05), np.float64(8.329528287078186e-13), np.float64(-1.8342475581695208e-07), np.float64(-4.5447820089623744e-13), np.float64(2.1097268568932017e-06), np.float64(1.0736196042188054e-13), np.float64(-6.657016467863654e-07), np.float64(-2.3006068761575285e-14), np.float64(2.771475571330749e-08), np.float64(3.785563500486519e-15), np.float64(1.81112445861361e-08), np.float64(-2.979464915666287e-16), np.float64(-5.765880846910699e-10), np.float64(-4.5910914595220634e-17), np.float64(-1.8675044544364565e-10), np.float64(1.8607154483709667e-17), np.float64(-1.1051709503079369e-13), np.float64(-2.2999401250250562e-18), np.float64(7.870664584153722e-13), np.float64(3.833233541708428e-20), np.float64(1.4458215827506127e-14), np.float64(-6.3887225695140406e-21), np.float64(-1.581513897457419e-15), np.float64(2.874925156281318e-20), np.float64(-4.911969347570868e-17), np.float64(2.5554890278056162e-20), np.float64(1.7209621421628455e-18), np.float64(-5.1109780556112336e-20)],
    [np.float64(1.2189639595689277e-05), np.float64(5.93291923735975e-10), np.float64(-1.3829797928178296e-05), np.float64(-6.733683711118791e-11), np.float64(5.110952429210385e-06), np.float64(4.569349880406855e-12), np.float64(-2.045806148848436e-06), np.float64(-1.028170629502755e-12), np.float64(4.938118952413412e-07), np.float64(4.604395884412738e-13), np.float64(-3.6187147077003145e-08), np.float64(-2.359481948740451e-13), np.float64(-1.2876970341858612e-08), np.float64(7.893478408511783e-14), np.float64(2.57441829648926e-09), np.float64(-1.6558642640622294e-14), np.float64(1.3641501517611226e-10), np.float64(1.870172282426267e-15), np.float64(-3.032466084879193e-11), np.float64(1.1551705700299291e-17), np.float64(-1.3216291478651107e-12), np.float64(-3.4376839568897825e-17), np.float64(1.3031567124990045e-13), np.float64(3.292138687207633e-18), np.float64(6.635508790259668e-15), np.float64(1.4394278590092105e-19), np.float64(-2.459591120153899e-16), np.float64(-4.043799349053246e-20), np.float64(-1.6798965065917524e-17), np.float64(1.514826015505869e-20), np.float64(2.0307278409678959e-19)],
    [np.float64(9.732867222563822e-10), np.float64(1.2762035244043507e-05), np.float64(2.8461406289957876e-10), np.float64(-3.862155704972934e-06), np.float64(1.7699632884971576e-10), np.float64(1.3693326308307794e-06), np.float64(-8.249267777194779e-11), np.float64(-2.764602721008619e-07), np.float64(1.9425149452117418e-11), np.float64(1.0278574540147829e-08), np.float64(-4.209768942259885e-12), np.float64(1.1757658251026569e-08), np.float64(7.48032036120318e-13), np.float64(-3.0559270291774727e-09), np.float64(-8.204502433425246e-14), np.float64(1.1448993295869654e-10), np.float64(-1.4006775626002364e-15), np.float64(5.1287034567438855e-11), np.float64(2.447987590309049e-15), np.float64(-2.835592093157776e-12), np.float64(-4.0834358822886265e-16), np.float64(-4.262853061471768e-13), np.float64(1.65084591196243e-17), np.float64(1.2726812116893732e-14), np.float64(3.278213268481892e-18), np.float64(1.85529381868041e-15), np.float64(-3.5257762680505603e-19), np.float64(-1.501789028512453e-17), np.float64(-1.5971806423785101e-21), np.float64(-4.3974376036286346e-18), np.float64(-1.0381674175460318e-20)],
    [np.float64(1.222717549416866e-06), np.float64(4.915538037539234e-08), np.float64(-1.1951953955957525e-06), np.float64(-5.953551925225304e-09), np.float64(-6.236551160090188e-08), np.float64(3.715338910318222e-10), np.float64(-8.2541799383123e-09), np.float64(-6.611683720125193e-11), np.float64(3.155976904069617e-08), np.float64(3.4251330959079844e-11), np.float64(-1.417031085773037e-08), np.float64(-1.8976247711353733e-11), np.float64(3.155854155757449e-09), np.float64(6.50013967541846e-12), np.float64(-2.4367736812710645e-10), np.float64(-1.3804689301909704e-12), np.float64(-4.324127658283439e-11), np.float64(1.5833000453261224e-13), np.float64(9.003565879289055e-12), np.float64(3.9987585429888326e-16), np.float64(1.498341375933516e-13), np.float64(-2.8034000255847184e-15), np.float64(-8.720166841261228e-14), np.float64(2.724691599904969e-16), np.float64(-8.554185886708627e-16), np.float64(1.1841288276533648e-17), np.float64(3.9148400828587045e-16), np.float64(-2.5589282693255807e-18), np.float64(6.2400225561138476e-18), np.float64(-2.249700683139302e-20), np.float64(-9.364688118386454e-19)],
    [np.float64(2.0351067043753556e-08), np.float64(2.7890627970118125e-06), np.float64(7.013618961739311e-10), np.float64(-6.781221031037384e-07), np.float64(6.340241635555525e-09), np.float64(2.194023526920534e-07), np.float64(-2.545243204256672e-09), np.float64(-6.487910387747203e-08), np.float64(5.941917562991549e-10), np.float64(1.605296055659937e-08), np.float64(-1.3023027043449338e-10), np.float64(-2.8595683698925723e-09), np.float64(2.4836881925139885e-11), np.float64(2.047720490604694e-10), np.float64(-3.380409213419807e-12), np.float64(4.704073530715634e-11), np.float64(1.7151213079230622e-13), np.float64(-1.3656239965678627e-11), np.float64(4.632961414880703e-14), np.float64(7.500026918591363e-13), np.float64(-1.1940317144885413e-14), np.float64(1.414251742116971e-13), np.float64(9.423096265799819e-16), np.float64(-1.3177037275398414e-14), np.float64(4.9610626875659794e-17), np.float64(-8.195072983532143e-16), np.float64(-1.2514509275776517e-17), np.float64(7.236496072109536e-17), np.float64(2.3468573063949233e-19), np.float64(3.2262300297619803e-18), np.float64(6.189074989216728e-20)],
    [np.float64(3.743361701119771e-08), np.float64(6.243070893714449e-07), np.float64(5.8777051125307815e-08), np.float64(-7.971538065969451e-08), np.float64(-1.644923256618569e-07), np.float64(4.995081118353397e-09), np.float64(5.917811770882154e-08), np.float64(-7.365763364666776e-10), np.float64(-1.3245486690772013e-08), np.float64(4.246385139920244e-10), np.float64(2.1166241200764454e-09), np.float64(-2.434475369587365e-10), np.float64(-1.1423531733975189e-10), np.float64(8.37497555509639e-11), np.float64(-5.0973502783694485e-11), np.float64(-1.776735835851312e-11), np.float64(1.593645351759518e-11), np.float64(2.0244755667385475e-12), np.float64(-1.7159426290774483e-12), np.float64(8.8696664475878e-15), np.float64(-6.018551551221728e-14), np.float64(-3.634649773560347e-14), np.float64(2.781939208412031e-14), np.float64(3.4498633826579795e-15), np.float64(-6.694305901071338e-16), np.float64(1.630433319454142e-16), np.float64(-1.8732792705990738e-16), np.float64(-3.286464952535054e-17), np.float64(4.2827899806429006e-18), np.float64(-3.9904560111925603e-19), np.float64(7.324570602157701e-19)],
])
